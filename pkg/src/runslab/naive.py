"""Literal reference implementations used as oracles.

Everything here is written as a direct executable reading of the
definitions: periods by scanning every candidate, period-maximal intervals
by checking both one-step extensions of every interval, root sets by
testing every candidate factor for the Lyndon property.  Speed is not a
goal; the `verify` CLI subcommands and the property tests depend on these
staying naive.
"""

from __future__ import annotations

from .analysis import LyndonRootSet, PeriodMaximalInterval
from .errors import DomainError
from .words import BOTH_ORDERS, Interval, Order, Word, is_lyndon

__all__ = [
    "period_by_scan",
    "period_maximal_intervals",
    "lyndon_roots",
    "run_intervals",
    "charged_positions",
    "stable_idle",
    "left_stable_idle",
]


def period_by_scan(b: bytes, i: int, j: int) -> int:
    """Smallest period of ``w[i..j]`` by trying p = 1, 2, ... directly.

    `b` is the whole word as 0/1 bytes; positions are 1-based.
    """
    length = j - i + 1
    for p in range(1, length + 1):
        if all(b[x] == b[x + p] for x in range(i - 1, j - p)):
            return p
    return length  # unreachable: p == length always holds


def _period_table(b: bytes) -> dict[tuple[int, int], int]:
    n = len(b)
    return {
        (i, j): period_by_scan(b, i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
    }


def period_maximal_intervals(w: Word) -> list[PeriodMaximalInterval]:
    """Every interval whose one-step extensions change the smallest period.

    If any strict extension preserved the period, so would the one-step
    extension toward it, so checking both single steps suffices.
    """
    b = w.to_bytes01()
    n = len(w)
    table = _period_table(b)
    out = []
    for (i, j), p in table.items():
        if i > 1 and table[(i - 1, j)] == p:
            continue
        if j < n and table[(i, j + 1)] == p:
            continue
        right_open = j == n
        out.append(
            PeriodMaximalInterval(
                interval=Interval(i, j),
                period=p,
                left_open=(i == 1),
                right_open=right_open,
                breaking_letter=None if right_open else b[j],
                is_run=(j - i + 1) >= 2 * p,
            )
        )
    out.sort(key=lambda s: s.interval)
    return out


def _is_period_maximal(w: Word, s: PeriodMaximalInterval) -> bool:
    b = w.to_bytes01()
    n = len(w)
    i, j = s.interval
    p = period_by_scan(b, i, j)
    if p != s.period:
        return False
    if i > 1 and period_by_scan(b, i - 1, j) == p:
        return False
    if j < n and period_by_scan(b, i, j + 1) == p:
        return False
    return True


def lyndon_roots(w: Word, s: PeriodMaximalInterval) -> LyndonRootSet:
    """Admissible Lyndon roots of `s` by scanning every candidate factor.

    Candidates are the factors of length ``s.period`` inside `s` starting
    strictly after ``s.start``.  A candidate is kept when it is Lyndon
    under an admitted order: both orders are admitted for a right-open
    interval, only the order preferring the breaking letter otherwise.
    """
    if not _is_period_maximal(w, s):
        raise DomainError(f"{s.interval} is not period-maximal in {w}")
    if s.right_open:
        admitted = BOTH_ORDERS
    else:
        admitted = frozenset({Order.preferring(s.breaking_letter)})
    p = s.period
    roots = []
    for start in range(s.start + 1, s.end - p + 2):
        candidate = w.factor(start, start + p - 1)
        lyndon_under = frozenset(order for order in Order if is_lyndon(candidate, order))
        if lyndon_under & admitted:
            roots.append((Interval(start, start + p - 1), lyndon_under))
    return LyndonRootSet(owner=s, roots=tuple(roots))


def run_intervals(w: Word) -> list[PeriodMaximalInterval]:
    return [s for s in period_maximal_intervals(w) if s.is_run]


def charged_positions(w: Word) -> frozenset[int]:
    out = set()
    for r in run_intervals(w):
        starts = lyndon_roots(w, r).starts
        out.add(max(starts))
    return frozenset(out)


def _open_run_order(root_set: LyndonRootSet) -> Order:
    # Same tie-breaking as the fast path: period-one runs use ZERO_FIRST,
    # otherwise the order whose earliest root starts no earlier.
    if root_set.owner.period == 1:
        return Order.ZERO_FIRST
    b0 = root_set.starts_under(Order.ZERO_FIRST)
    b1 = root_set.starts_under(Order.ONE_FIRST)
    if not b1:
        return Order.ZERO_FIRST
    if not b0:
        return Order.ONE_FIRST
    return Order.ONE_FIRST if min(b1) >= min(b0) else Order.ZERO_FIRST


def stable_idle(w: Word) -> frozenset[int]:
    """Literal evaluation of the extension-safe idle cases."""
    out: set[int] = set()
    for s in period_maximal_intervals(w):
        root_set = lyndon_roots(w, s)
        starts = root_set.starts
        if not starts:
            continue
        if not s.is_run:
            if s.closed:
                out |= starts
        elif not s.right_open:
            admitted = root_set.starts_under(Order.preferring(s.breaking_letter))
            if admitted:
                out |= admitted - {max(admitted)}
        else:
            admitted = root_set.starts_under(_open_run_order(root_set))
            if admitted:
                out |= admitted - {max(admitted)}
    return frozenset(out)


def left_stable_idle(w: Word) -> frozenset[int]:
    """Literal evaluation of the left-extension-safe idle cases."""
    out: set[int] = set()
    for s in period_maximal_intervals(w):
        starts = lyndon_roots(w, s).starts
        if not starts:
            continue
        top = max(starts)
        out |= starts - {top}
        if not s.is_run and not s.left_open:
            out.add(top)
    b = w.to_bytes01()
    n = len(w)
    for k in range(2, n + 1):
        # tail of the shape: one letter, then a constant block of the other
        a = b[k - 1]
        if b[k - 2] != a and all(b[x] == a for x in range(k - 1, n)):
            out.add(k)
    return frozenset(out)
