"""Binary words, the two letter orders, periods, and Lyndon factors.

Words live over the alphabet {0, 1}.  All public positions are 1-based and
intervals are closed on both ends, so ``w[i]`` is defined for
``1 <= i <= len(w)`` and ``w.factor(i, j)`` is the factor from position
``i`` through ``j`` inclusive.  Words are immutable and bit-packed.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, InputError

__all__ = [
    "Order",
    "BOTH_ORDERS",
    "Interval",
    "Word",
    "complement",
    "compare",
    "smallest_period",
    "is_lyndon",
    "lyndon_factor_end",
]


class Order(enum.Enum):
    """One of the two lexicographic orders on binary words.

    ``ZERO_FIRST`` is the order where the letter 0 precedes 1, and
    ``ONE_FIRST`` the order where 1 precedes 0.  ``smaller`` is the letter
    the order ranks first.
    """

    ZERO_FIRST = 0
    ONE_FIRST = 1

    @property
    def smaller(self) -> int:
        return self.value

    @property
    def larger(self) -> int:
        return 1 - self.value

    @property
    def opposite(self) -> "Order":
        return Order(1 - self.value)

    @classmethod
    def preferring(cls, letter: int) -> "Order":
        """The order under which `letter` is the smaller letter."""
        if letter not in (0, 1):
            raise DomainError(f"letter must be 0 or 1, got {letter!r}")
        return cls(letter)

    @property
    def token(self) -> str:
        """Stable text form used in JSON reports: '0<1' or '1<0'."""
        return "0<1" if self is Order.ZERO_FIRST else "1<0"

    @classmethod
    def from_token(cls, token: str) -> "Order":
        for order in cls:
            if order.token == token:
                return order
        raise InputError(f"unknown order token {token!r}")


BOTH_ORDERS = frozenset(Order)


class Interval(NamedTuple):
    """A closed 1-based interval of positions ``[start..end]``."""

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def __str__(self) -> str:
        return f"[{self.start}..{self.end}]"


class Word:
    """An immutable binary word, bit-packed as an integer.

    Bit ``i - 1`` of ``bits`` holds the letter at position ``i``.
    """

    __slots__ = ("_bits", "_length", "_cache01")

    def __init__(self, bits: int, length: int):
        if length < 0:
            raise DomainError("word length must be nonnegative")
        if bits < 0 or bits >> length:
            raise DomainError("bits do not fit the stated length")
        self._bits = bits
        self._length = length
        self._cache01: bytes | None = None

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse an ASCII string of '0'/'1' characters."""
        bits = 0
        for pos, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << pos
            elif ch != "0":
                raise InputError(f"invalid character {ch!r} at position {pos + 1}; expected '0' or '1'")
        return cls(bits, len(text))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        bits = 0
        n = 0
        for letter in letters:
            if letter not in (0, 1):
                raise InputError(f"invalid letter {letter!r}; expected 0 or 1")
            if letter:
                bits |= 1 << n
            n += 1
        return cls(bits, n)

    @classmethod
    def from_bytes01(cls, raw: bytes) -> "Word":
        return cls.from_letters(raw)

    @property
    def bits(self) -> int:
        return self._bits

    def __len__(self) -> int:
        return self._length

    def __getitem__(self, position: int) -> int:
        """Letter at 1-based `position`."""
        if not isinstance(position, int):
            raise TypeError("positions are plain integers")
        if not 1 <= position <= self._length:
            raise DomainError(f"position {position} out of range 1..{self._length}")
        return (self._bits >> (position - 1)) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for _ in range(self._length):
            yield bits & 1
            bits >>= 1

    def to_bytes01(self) -> bytes:
        """The word as raw bytes of 0/1 values, index 0 = position 1."""
        if self._cache01 is None:
            self._cache01 = bytes(self)
        return self._cache01

    def factor(self, start: int, end: int) -> "Word":
        """The factor ``w[start..end]`` as a new word."""
        if not (1 <= start <= end <= self._length):
            raise DomainError(f"invalid factor [{start}..{end}] of a word of length {self._length}")
        length = end - start + 1
        return Word((self._bits >> (start - 1)) & ((1 << length) - 1), length)

    def append(self, letter: int) -> "Word":
        if letter not in (0, 1):
            raise DomainError(f"invalid letter {letter!r}")
        return Word(self._bits | (letter << self._length), self._length + 1)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self._bits | (other._bits << self._length), self._length + len(other))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._bits == other._bits and self._length == other._length

    def __hash__(self) -> int:
        return hash((self._bits, self._length))

    def __lt__(self, other: "Word") -> bool:
        # Plain text order; handy for deterministic sorting of word lists.
        return str(self) < str(other)

    def __str__(self) -> str:
        return "".join("01"[b] for b in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def complement(w: Word) -> Word:
    """The word with every letter flipped."""
    n = len(w)
    return Word(w.bits ^ ((1 << n) - 1), n)


def compare(u: Word, v: Word, order: Order) -> int:
    """Lexicographic comparison under `order`: -1, 0, or 1.

    A proper prefix precedes its extensions.
    """
    a = order.smaller
    bu, bv = u.to_bytes01(), v.to_bytes01()
    for x, y in zip(bu, bv):
        if x != y:
            return -1 if (x ^ a) < (y ^ a) else 1
    if len(bu) == len(bv):
        return 0
    return -1 if len(bu) < len(bv) else 1


def smallest_period(u: Word) -> int:
    """The least p >= 1 with ``u[i] == u[i+p]`` wherever both sides exist.

    Computed from the border (failure-function) table: the smallest period
    equals the length minus the longest proper border.
    """
    n = len(u)
    if n == 0:
        raise DomainError("the empty word has no period")
    b = u.to_bytes01()
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and b[i] != b[k]:
            k = border[k - 1]
        if b[i] == b[k]:
            k += 1
        border[i] = k
    return n - border[n - 1]


def is_lyndon(u: Word, order: Order) -> bool:
    """Whether `u` strictly precedes each of its nonempty proper suffixes.

    Checked directly against the definition; such a word is unbordered and
    its smallest period equals its length.
    """
    n = len(u)
    if n == 0:
        raise DomainError("the empty word is not eligible")
    a = order.smaller
    b = u.to_bytes01()
    for t in range(1, n):
        # compare u with its suffix starting at 0-based t
        verdict = 0
        for x, y in zip(b, b[t:]):
            if x != y:
                verdict = -1 if (x ^ a) < (y ^ a) else 1
                break
        if verdict == 0:
            verdict = 1  # the suffix is a proper prefix of u, hence smaller
        if verdict >= 0:
            return False
    return True


def lyndon_factor_end(w: Word, start: int, order: Order) -> int:
    """End position of the longest Lyndon factor of `w` starting at `start`.

    A single letter is always Lyndon, so the result is at least `start`.
    Uses one step of Duval's factorization: the first factor of the Lyndon
    factorization of ``w[start..]`` is its longest Lyndon prefix.
    """
    n = len(w)
    if not 1 <= start <= n:
        raise DomainError(f"position {start} out of range 1..{n}")
    a = order.smaller
    b = w.to_bytes01()
    i = start
    j = start + 1
    while j <= n:
        x = b[i - 1] ^ a
        y = b[j - 1] ^ a
        if x == y:
            i += 1
        elif x < y:
            i = start
        else:
            break
        j += 1
    return start + (j - i) - 1
