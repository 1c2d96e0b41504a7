"""Period-maximal intervals, Lyndon-root sets, and idle-position reports.

The central object is the ownership map: every position k >= 2 of a word,
except the single position whose tail has the shape "one letter followed by
a constant block of the other letter", starts exactly one admissible Lyndon
root, and that root determines a unique period-maximal interval owning k.
Grouping positions by owner reconstructs every root set without enumerating
all O(n^2) intervals; the literal enumeration lives in :mod:`runslab.naive`
and the two are compared exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .words import BOTH_ORDERS, Interval, Order, Word, lyndon_factor_end, smallest_period

__all__ = [
    "PeriodMaximalInterval",
    "OwnedRoot",
    "LyndonRootSet",
    "IdleReport",
    "period_maximal_extension",
    "owner_of",
    "lyndon_root_map",
    "runs",
    "charged_positions",
    "stable_idle",
    "left_stable_idle",
    "idle_report",
]


@dataclass(frozen=True, eq=False)
class PeriodMaximalInterval:
    """An interval of a word that cannot grow without changing its period.

    ``breaking_letter`` is the letter immediately after the interval and is
    present exactly when the interval is right-closed; it is the letter that
    violates the period.  ``is_run`` means the length is at least twice the
    period.  Identity is the (start, end) pair.
    """

    interval: Interval
    period: int
    left_open: bool
    right_open: bool
    breaking_letter: int | None
    is_run: bool

    @property
    def start(self) -> int:
        return self.interval.start

    @property
    def end(self) -> int:
        return self.interval.end

    @property
    def length(self) -> int:
        return self.interval.length

    @property
    def closed(self) -> bool:
        return not self.left_open and not self.right_open

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PeriodMaximalInterval) and self.interval == other.interval

    def __hash__(self) -> int:
        return hash(("pmi", self.interval))

    def __str__(self) -> str:
        return f"{self.interval} p={self.period}"


@dataclass(frozen=True)
class OwnedRoot:
    """The admissible Lyndon root starting at one position, with its owner.

    ``orders`` lists the orders under which the root word is Lyndon: both
    for a single letter, exactly one otherwise.
    """

    owner: PeriodMaximalInterval
    root: Interval
    orders: frozenset[Order]


@dataclass(frozen=True)
class LyndonRootSet:
    """All admissible Lyndon roots of one period-maximal interval.

    Roots have length equal to the owner's period and never start at the
    owner's first position.  For a right-closed owner every root is Lyndon
    under the order that ranks the breaking letter first.
    """

    owner: PeriodMaximalInterval
    roots: tuple[tuple[Interval, frozenset[Order]], ...]

    @property
    def starts(self) -> frozenset[int]:
        return frozenset(root.start for root, _ in self.roots)

    def starts_under(self, order: Order) -> frozenset[int]:
        """Starts of the roots that are Lyndon words under `order`."""
        return frozenset(root.start for root, orders in self.roots if order in orders)

    @property
    def max_start(self) -> int:
        return max(root.start for root, _ in self.roots)


@dataclass(frozen=True)
class IdleReport:
    """Charged and idle positions of one word, with the extension-safe sets.

    ``charged`` holds the last root start of every run; ``idle`` is the
    ordered complement.  ``stable`` collects idle positions that stay idle
    under arbitrary two-sided extension of the word, ``left_stable`` those
    that survive arbitrary left extension; the first is contained in the
    second.
    """

    length: int
    runs: tuple[PeriodMaximalInterval, ...]
    charged: frozenset[int]
    idle: tuple[int, ...]
    stable: frozenset[int]
    left_stable: frozenset[int]


def period_maximal_extension(w: Word, seed: Interval) -> PeriodMaximalInterval:
    """Grow `seed` as far as its content's smallest period allows.

    The result is the unique period-maximal interval containing `seed`
    whose content has the same smallest period as ``w[seed]``.  Growth is
    greedy on both sides; any factor containing the seed would inherit a
    smaller period, so the grown interval's smallest period is unchanged.
    """
    n = len(w)
    if not (1 <= seed.start <= seed.end <= n):
        raise DomainError(f"seed {seed} does not fit a word of length {n}")
    b = w.to_bytes01()
    p = smallest_period(w.factor(seed.start, seed.end))
    i, j = seed.start, seed.end
    while j < n and b[j] == b[j - p]:
        j += 1
    while i > 1 and b[i - 2] == b[i - 2 + p]:
        i -= 1
    if __debug__:
        assert smallest_period(w.factor(i, j)) == p
    right_open = j == n
    return PeriodMaximalInterval(
        interval=Interval(i, j),
        period=p,
        left_open=(i == 1),
        right_open=right_open,
        breaking_letter=None if right_open else b[j],
        is_run=(j - i + 1) >= 2 * p,
    )


def _constant_tail_start(b: bytes) -> int:
    """First position t such that ``w[t..n]`` repeats a single letter."""
    t = len(b)
    while t > 1 and b[t - 2] == b[t - 1]:
        t -= 1
    return t


def owner_of(w: Word, k: int) -> OwnedRoot | None:
    """The period-maximal interval owning position `k`, with its root.

    Position 1 owns nothing, and neither does the position whose preceding
    letter differs while everything from the position to the end repeats a
    single letter.  Otherwise: if ``w[k] == w[k-1]`` the root is the single
    letter at k; else the root is the longest Lyndon factor at k under the
    order preferring ``w[k]``.  The owner is the root's period-maximal
    extension.
    """
    n = len(w)
    if not 1 <= k <= n:
        raise DomainError(f"position {k} out of range 1..{n}")
    if k == 1:
        return None
    b = w.to_bytes01()
    a = b[k - 1]
    if b[k - 2] == a:
        root = Interval(k, k)
        orders = BOTH_ORDERS
    else:
        if k == _constant_tail_start(b):
            return None
        end = lyndon_factor_end(w, k, Order.preferring(a))
        root = Interval(k, end)
        orders = BOTH_ORDERS if end == k else frozenset({Order.preferring(a)})
    owner = period_maximal_extension(w, root)
    return OwnedRoot(owner=owner, root=root, orders=orders)


def lyndon_root_map(w: Word) -> dict[PeriodMaximalInterval, LyndonRootSet]:
    """Group the ownership map by owner.

    Covers every period-maximal interval with a nonempty root set; owners
    that own no position do not appear.  Root-start sets of distinct owners
    are disjoint, so the grouping is unambiguous.
    """
    grouped: dict[PeriodMaximalInterval, list[tuple[Interval, frozenset[Order]]]] = {}
    for k in range(2, len(w) + 1):
        owned = owner_of(w, k)
        if owned is None:
            continue
        grouped.setdefault(owned.owner, []).append((owned.root, owned.orders))
    return {
        owner: LyndonRootSet(owner=owner, roots=tuple(sorted(items, key=lambda item: item[0])))
        for owner, items in grouped.items()
    }


def runs(w: Word) -> list[PeriodMaximalInterval]:
    """All runs of `w` (period-maximal intervals of length >= twice the
    period), sorted by interval.  Every run owns at least one position, so
    the ownership map enumerates them completely."""
    found = [s for s in lyndon_root_map(w) if s.is_run]
    found.sort(key=lambda s: s.interval)
    return found


def _choose_open_run_order(root_set: LyndonRootSet) -> Order:
    """Order used for a right-open run: the one whose earliest root starts
    no earlier than the other order's earliest root.  Fixed to ZERO_FIRST
    for period-one runs, where both orders carry the same starts."""
    if root_set.owner.period == 1:
        return Order.ZERO_FIRST
    b0 = root_set.starts_under(Order.ZERO_FIRST)
    b1 = root_set.starts_under(Order.ONE_FIRST)
    if not b1:
        return Order.ZERO_FIRST
    if not b0:
        return Order.ONE_FIRST
    return Order.ONE_FIRST if min(b1) >= min(b0) else Order.ZERO_FIRST


def _stable_idle_from_map(root_map: dict[PeriodMaximalInterval, LyndonRootSet]) -> frozenset[int]:
    out: set[int] = set()
    for owner, root_set in root_map.items():
        if not owner.is_run:
            if owner.closed:
                out |= root_set.starts
        elif not owner.right_open:
            admitted = root_set.starts_under(Order.preferring(owner.breaking_letter))
            if admitted:
                out |= admitted - {max(admitted)}
        else:
            admitted = root_set.starts_under(_choose_open_run_order(root_set))
            if admitted:
                out |= admitted - {max(admitted)}
    return frozenset(out)


def _left_stable_idle_from_map(
    w: Word, root_map: dict[PeriodMaximalInterval, LyndonRootSet]
) -> frozenset[int]:
    out: set[int] = set()
    for owner, root_set in root_map.items():
        top = root_set.max_start
        out |= root_set.starts - {top}
        if not owner.is_run and not owner.left_open:
            out.add(top)
    n = len(w)
    if n >= 2:
        t = _constant_tail_start(w.to_bytes01())
        if t >= 2:
            out.add(t)
    return frozenset(out)


def stable_idle(w: Word) -> frozenset[int]:
    """Idle positions that remain idle in every extension of the word.

    A position qualifies when it starts a root of a closed non-run
    interval, a non-final root (under the breaking order) of a broken run,
    or a non-final root of a right-open run under the order picked by
    :func:`_choose_open_run_order`.  The count of such positions never
    decreases when the word is extended on either side.
    """
    return _stable_idle_from_map(lyndon_root_map(w))


def left_stable_idle(w: Word) -> frozenset[int]:
    """Idle positions that remain idle under any left extension.

    Cases: the last root start of a left-closed non-run interval; any
    non-final root start of any period-maximal interval; and the position
    where the tail "one letter, then a constant block of the other letter"
    begins.  Contains :func:`stable_idle`.
    """
    return _left_stable_idle_from_map(w, lyndon_root_map(w))


def charged_positions(w: Word) -> frozenset[int]:
    """The last root start of every run; one position per run."""
    root_map = lyndon_root_map(w)
    return frozenset(root_set.max_start for owner, root_set in root_map.items() if owner.is_run)


def idle_report(w: Word) -> IdleReport:
    """Full charged/idle breakdown of one word, computed in one pass."""
    root_map = lyndon_root_map(w)
    run_list = sorted((s for s in root_map if s.is_run), key=lambda s: s.interval)
    charged = frozenset(root_map[s].max_start for s in run_list)
    idle = tuple(k for k in range(1, len(w) + 1) if k not in charged)
    return IdleReport(
        length=len(w),
        runs=tuple(run_list),
        charged=charged,
        idle=idle,
        stable=_stable_idle_from_map(root_map),
        left_stable=_left_stable_idle_from_map(w, root_map),
    )
