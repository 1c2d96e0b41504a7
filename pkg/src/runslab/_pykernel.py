"""Pure-Python hot kernels.

Array-level implementations of the per-word idle-set computations and the
depth-first threshold search.  The compiled extension `runslab._kernel`
implements the same routines with the same semantics; `runslab.kernel`
picks whichever is available.  Words cross this boundary as raw bytes of
0/1 values; all returned positions are 1-based.

The word buffer is padded so that index k corresponds to position k, which
keeps the index arithmetic identical to the compiled twin.
"""

from __future__ import annotations

from .errors import DomainError

IMPLEMENTATION = "pure"

MAX_WORD = 2048

# owner record layout: [i, j, p, maxB, maxB0, maxB1, minB0, minB1]
_I, _J, _P, _MAXB, _MAXB0, _MAXB1, _MINB0, _MINB1 = range(8)


def _structure(buf, n):
    """Ownership pass over ``buf[1..n]``.

    Returns (owners, own_of, t): owner records, the owner index per
    position (-1 when none), and the start of the maximal constant-letter
    suffix.  ``own_of[k] == -1`` happens exactly for k == 1 and for the
    single position whose tail is one letter followed by a constant block
    of the other letter.
    """
    own_of = [-1] * (n + 1)
    owners: list[list[int]] = []
    t = n
    while t > 1 and buf[t - 1] == buf[t]:
        t -= 1
    last = -1
    for k in range(2, n + 1):
        a = buf[k]
        if buf[k - 1] == a:
            root_end = k
            p = 1
        else:
            if k == t:
                continue
            # Duval step: end of the longest Lyndon factor at k under the
            # order that ranks `a` first.
            i = k
            j = k + 1
            while j <= n:
                x = buf[i] ^ a
                y = buf[j] ^ a
                if x == y:
                    i += 1
                elif x < y:
                    i = k
                else:
                    break
                j += 1
            root_end = k + (j - i) - 1
            p = root_end - k + 1
        # grow the root to its period-maximal extension
        j2 = root_end
        while j2 < n and buf[j2 + 1] == buf[j2 + 1 - p]:
            j2 += 1
        i2 = k
        while i2 > 1 and buf[i2 - 1] == buf[i2 - 1 + p]:
            i2 -= 1
        idx = -1
        if last >= 0 and owners[last][_I] == i2 and owners[last][_J] == j2:
            idx = last
        else:
            for q in range(len(owners) - 1, -1, -1):
                rec = owners[q]
                if rec[_I] == i2 and rec[_J] == j2:
                    idx = q
                    break
            if idx < 0:
                idx = len(owners)
                owners.append([i2, j2, p, 0, 0, 0, 0, 0])
        last = idx
        rec = owners[idx]
        own_of[k] = idx
        rec[_MAXB] = k
        if p == 1 or a == 0:
            if rec[_MINB0] == 0:
                rec[_MINB0] = k
            rec[_MAXB0] = k
        if p == 1 or a == 1:
            if rec[_MINB1] == 0:
                rec[_MINB1] = k
            rec[_MAXB1] = k
    return owners, own_of, t


def _open_run_letter(rec):
    """Letter choice for a right-open run: the one whose earliest root
    starts no earlier than the other's; 0 for period one."""
    if rec[_P] == 1 or rec[_MINB1] == 0:
        return 0
    if rec[_MINB0] == 0:
        return 1
    return 1 if rec[_MINB1] >= rec[_MINB0] else 0


def _stable_positions(buf, n, owners, own_of):
    out = []
    for k in range(2, n + 1):
        idx = own_of[k]
        if idx < 0:
            continue
        rec = owners[idx]
        i, j, p = rec[_I], rec[_J], rec[_P]
        if (j - i + 1) < 2 * p:
            if i > 1 and j < n:
                out.append(k)  # root of a closed non-run interval
        elif j < n:
            blet = buf[j + 1]
            if p == 1 or buf[k] == blet:
                if k != (rec[_MAXB1] if blet else rec[_MAXB0]):
                    out.append(k)  # non-final root of a broken run
        else:
            a = _open_run_letter(rec)
            if p == 1 or buf[k] == a:
                if k != (rec[_MAXB1] if a else rec[_MAXB0]):
                    out.append(k)  # non-final root of an open run
    return out


def _left_stable_positions(buf, n, owners, own_of, t):
    out = []
    for k in range(2, n + 1):
        idx = own_of[k]
        if idx < 0:
            if k == t:
                out.append(k)  # constant-tail position
            continue
        rec = owners[idx]
        if k != rec[_MAXB]:
            out.append(k)  # non-final root of any interval
        elif (rec[_J] - rec[_I] + 1) < 2 * rec[_P] and rec[_I] > 1:
            out.append(k)  # final root of a left-closed non-run
    return out


def _padded(word: bytes) -> tuple[bytearray, int]:
    n = len(word)
    if n > MAX_WORD:
        raise DomainError(f"kernel words are limited to {MAX_WORD} letters")
    buf = bytearray(n + 2)
    buf[1 : n + 1] = word
    return buf, n


def stable_idle_positions(word: bytes) -> list[int]:
    """Idle positions that survive arbitrary two-sided extension."""
    buf, n = _padded(word)
    owners, own_of, _ = _structure(buf, n)
    return _stable_positions(buf, n, owners, own_of)


def left_stable_idle_positions(word: bytes) -> list[int]:
    """Idle positions that survive arbitrary left extension."""
    buf, n = _padded(word)
    owners, own_of, t = _structure(buf, n)
    return _left_stable_positions(buf, n, owners, own_of, t)


def charged_positions(word: bytes) -> list[int]:
    buf, n = _padded(word)
    owners, _, _ = _structure(buf, n)
    return sorted(
        rec[_MAXB] for rec in owners if (rec[_J] - rec[_I] + 1) >= 2 * rec[_P]
    )


def run_intervals(word: bytes) -> list[tuple[int, int, int]]:
    """Runs as (start, end, period) triples, sorted."""
    buf, n = _padded(word)
    owners, _, _ = _structure(buf, n)
    return sorted(
        (rec[_I], rec[_J], rec[_P])
        for rec in owners
        if (rec[_J] - rec[_I] + 1) >= 2 * rec[_P]
    )


def run_count(word: bytes) -> int:
    buf, n = _padded(word)
    owners, _, _ = _structure(buf, n)
    return sum(1 for rec in owners if (rec[_J] - rec[_I] + 1) >= 2 * rec[_P])


def search_subtree(
    prefix: bytes,
    d: int,
    known,
    best_start: int,
    use_known_prune: bool,
    collect_deepest: bool = True,
    debug: bool = False,
):
    """Depth-first expansion of every word extending `prefix`.

    Visits `prefix` itself, then children in letter order 0, 1.  A node
    stops the descent when its stable-idle count reaches `d`, or when a
    known threshold pair (d', m') proves that no extension can exceed the
    best length seen so far.  Returns
    ``(max_depth, deepest_words, nodes, pruned_basic, pruned_known)`` where
    `deepest_words` lists every visited word of length `max_depth`.
    """
    n0 = len(prefix)
    if n0 < 1:
        raise DomainError("prefix must be nonempty")
    buf = bytearray(MAX_WORD + 2)
    buf[1 : n0 + 1] = prefix
    state = bytearray(MAX_WORD + 2)
    parent_d = [0] * (MAX_WORD + 2)
    known = sorted(known or ())
    kd = [pair[0] for pair in known]
    km = [pair[1] for pair in known]
    nk = len(known)
    nodes = 0
    pruned_basic = 0
    pruned_known = 0
    best = best_start
    local_max = 0
    deepest: list[bytes] = []

    def visit(ln: int) -> bool:
        nonlocal nodes, pruned_basic, pruned_known, best, local_max
        nodes += 1
        owners, own_of, _ = _structure(buf, ln)
        positions = _stable_positions(buf, ln, owners, own_of)
        nd = len(positions)
        if debug and ln > n0:
            assert nd >= parent_d[ln - 1], bytes(buf[1 : ln + 1])
        parent_d[ln] = nd
        if ln > local_max:
            local_max = ln
            if best < ln:
                best = ln
            deepest.clear()
            if collect_deepest:
                deepest.append(bytes(buf[1 : ln + 1]))
        elif ln == local_max and collect_deepest:
            deepest.append(bytes(buf[1 : ln + 1]))
        if nd >= d:
            pruned_basic += 1
            return False
        if use_known_prune:
            for qi in range(nk):
                window = best - km[qi] + 1
                need = d - kd[qi]
                count = 0
                for pos in positions:
                    if pos > window:
                        break
                    count += 1
                if count >= need:
                    pruned_known += 1
                    return False
        return True

    descend = visit(n0)
    state[n0] = 0 if descend else 2
    pos = n0
    while True:
        if state[pos] >= 2:
            if pos == n0:
                break
            pos -= 1
            continue
        letter = state[pos]
        state[pos] += 1
        if pos + 1 > MAX_WORD:
            raise DomainError(f"search exceeded the {MAX_WORD}-letter cap")
        buf[pos + 1] = letter
        pos += 1
        descend = visit(pos)
        state[pos] = 0 if descend else 2
    return local_max, deepest, nodes, pruned_basic, pruned_known


def min_left_stable(length: int) -> tuple[int, bytes]:
    """Minimum left-stable idle count over all words of `length`.

    Scans the words starting with 0; flipping every letter preserves the
    count, so the minimum over all words is the same.  Returns the minimum
    and the first witness in numeric order.
    """
    if length < 1:
        raise DomainError("length must be positive")
    if length > MAX_WORD:
        raise DomainError(f"kernel words are limited to {MAX_WORD} letters")
    n = length
    buf = bytearray(n + 2)
    best = None
    witness = b""
    for bits in range(1 << (n - 1)):
        v = bits
        for pos in range(2, n + 1):
            buf[pos] = v & 1
            v >>= 1
        owners, own_of, t = _structure(buf, n)
        count = len(_left_stable_positions(buf, n, owners, own_of, t))
        if best is None or count < best:
            best = count
            witness = bytes(buf[1 : n + 1])
            if best == 0:
                pass  # keep scanning: the first witness is already fixed
    return best, witness


def max_runs_scan(length: int) -> tuple[int, list[bytes]]:
    """Maximum run count over all words of `length`, with every witness
    starting with 0 (flipping letters preserves run intervals)."""
    if length < 1:
        raise DomainError("length must be positive")
    if length > MAX_WORD:
        raise DomainError(f"kernel words are limited to {MAX_WORD} letters")
    n = length
    buf = bytearray(n + 2)
    best = -1
    witnesses: list[bytes] = []
    for bits in range(1 << (n - 1)):
        v = bits
        for pos in range(2, n + 1):
            buf[pos] = v & 1
            v >>= 1
        owners, _, _ = _structure(buf, n)
        count = sum(1 for rec in owners if (rec[_J] - rec[_I] + 1) >= 2 * rec[_P])
        if count > best:
            best = count
            witnesses = [bytes(buf[1 : n + 1])]
        elif count == best:
            witnesses.append(bytes(buf[1 : n + 1]))
    return best, witnesses
