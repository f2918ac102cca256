"""Burst cycles and the all-cycles-burst criterion.

A non-adjacent vertex pair is square-diagonal when it has two mutually
non-adjacent common neighbors, i.e. it is the diagonal of an induced
4-cycle of the ambient graph.  An induced cycle is burst when some
non-adjacent pair on it is square-diagonal; the criterion checked by
:func:`check_tran_condition` asks this of every induced cycle of length
at least four.  The witnessing 4-cycle may use vertices off the tested
cycle: containment refers to the whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cycles import (
    EnumerationStats,
    InducedCycle,
    validate_cycle,
    visit_induced_paths,
)
from .graph import Graph, GraphError, bits

DEFAULT_WITNESS_CAP = 16


@dataclass(frozen=True, slots=True)
class BurstWitness:
    """Evidence that a cycle is burst.

    ``pair`` = (u, w), non-adjacent and both on the witnessed cycle;
    ``square`` = (u, a, w, b), an induced 4-cycle of the ambient graph
    with the pair as its diagonal.
    """

    pair: tuple[int, int]
    square: tuple[int, int, int, int]


def is_square_diagonal(g: Graph, u: int, w: int) -> tuple[int, int, int, int] | None:
    """Return the square (u, a, w, b) with lexicographically least (a, b),
    or None when the pair is adjacent or no such induced 4-cycle exists.
    """
    if not (0 <= u < g.n and 0 <= w < g.n):
        raise GraphError(f"invalid vertex pair ({u}, {w}) for n={g.n}")
    if u == w:
        raise GraphError("square diagonal needs two distinct vertices")
    if g.adjacent(u, w):
        return None
    common = g.rows[u] & g.rows[w]
    for a in bits(common):
        rest = common & ~g.rows[a] & ~(1 << a)
        if rest:
            b = (rest & -rest).bit_length() - 1
            return (u, a, w, b)
    return None


def _sd_row(rows: tuple[int, ...], n: int, u: int) -> int:
    """Bitmask of all w forming a square-diagonal pair with u."""
    row_u = rows[u]
    out = 0
    rest = ((1 << n) - 1) & ~row_u & ~(1 << u)
    while rest:
        low = rest & -rest
        rest ^= low
        w = low.bit_length() - 1
        common = row_u & rows[w]
        if common.bit_count() < 2:
            continue
        probe = common
        while probe:
            a_low = probe & -probe
            probe ^= a_low
            if common & ~rows[a_low.bit_length() - 1] & ~a_low:
                out |= low
                break
    return out


def square_diagonal_rows(g: Graph) -> tuple[int, ...]:
    """Bitmask per vertex u of all w forming a square-diagonal pair with u.

    The precomputed index behind the fast burst checks: row u has bit w
    set iff (u, w) is non-adjacent with two non-adjacent common neighbors.
    """
    return tuple(_sd_row(g.rows, g.n, u) for u in range(g.n))


def square_diagonal_pairs(g: Graph) -> frozenset[tuple[int, int]]:
    """All square-diagonal pairs (u, w) with u < w."""
    sd = square_diagonal_rows(g)
    return frozenset(
        (u, w) for u in range(g.n) for w in bits(sd[u]) if u < w
    )


def is_burst(g: Graph, c: InducedCycle) -> BurstWitness | None:
    """Witness for the first (lexicographic) square-diagonal pair on ``c``.

    Raises :class:`GraphError` if ``c`` violates its own invariants,
    which signals a caller bug rather than a negative answer.
    """
    validate_cycle(g, c)
    ordered = sorted(c.vertices)
    cmask = c.mask
    for i, u in enumerate(ordered):
        partners = cmask & ~g.rows[u] & ~(1 << u)
        for w in ordered[i + 1 :]:
            if not partners >> w & 1:
                continue
            square = is_square_diagonal(g, u, w)
            if square is not None:
                return BurstWitness(pair=(u, w), square=square)
    return None


@dataclass(frozen=True, slots=True)
class TranVerdict:
    """Outcome of the every-long-cycle-is-burst check.

    ``all_burst`` answers the question actually asked: is every induced
    cycle with length in [4, max_len] burst.  ``truncated`` is set when
    max_len fell short of n, in which case a True verdict is only "true
    up to the cap" and consumers needing the unbounded statement must
    rerun uncapped.  A False verdict always comes with at least one
    witness cycle.  ``counts`` records induced cycles examined per
    length (partial under early exit, deterministically so).
    """

    all_burst: bool
    non_burst_cycles: tuple[InducedCycle, ...]
    counts: dict[int, int] = field(hash=False)
    truncated: bool

    def to_json_dict(self, g: Graph) -> dict:
        """Stable JSON form; field order fixed, arrays canonically sorted."""
        return {
            "all_burst": self.all_burst,
            "truncated": self.truncated,
            "counts": {str(k): self.counts[k] for k in sorted(self.counts)},
            "non_burst_cycles": [list(c.labels(g)) for c in self.non_burst_cycles],
            "witnesses": [
                {"cycle": list(c.labels(g)), "length": len(c)}
                for c in self.non_burst_cycles
            ],
        }


def find_nonburst_cycle(
    g: Graph,
    max_len: int | None = None,
    start_below: int | None = None,
    sd_rows: Sequence[int] | None = None,
) -> InducedCycle | None:
    """Return the lexicographically first non-burst induced cycle with
    length in [4, max_len], or None when every such cycle is burst.

    Decision-procedure counterpart of :func:`check_tran_condition`: same
    boolean answer and same witness, usually far less work.  It grows
    only square-diagonal-free induced paths: once two non-adjacent
    vertices on the path form a square-diagonal pair, every cycle
    through that path is burst, so the whole subtree is pruned.
    Conversely a path that closes while SD-free is a non-burst cycle
    (length-4 closings cannot happen, their own diagonals being
    square-diagonal by construction).  Since a non-burst cycle's
    canonical path is never pruned, the first closing found is exactly
    the first non-burst cycle in canonical order.

    ``start_below`` restricts start vertices as in
    :func:`burstcheck.cycles.visit_induced_paths`; callers must know
    that every non-burst cycle has its minimum vertex in that range.
    ``sd_rows`` supplies precomputed square-diagonal rows (as from
    :func:`square_diagonal_rows`) when the caller has them; otherwise
    rows are computed lazily.
    """
    n = g.n
    effective = n if max_len is None else min(max_len, n)
    if effective < 4:
        return None
    rows = g.rows

    if sd_rows is not None:
        sd_row = sd_rows.__getitem__
    else:
        sd_cache: list[int | None] = [None] * n

        def sd_row(u: int) -> int:
            row = sd_cache[u]
            if row is None:
                row = sd_cache[u] = _sd_row(rows, n, u)
            return row

    found: InducedCycle | None = None

    def walk(path: list[int], path_mask: int, allowed: int, row_s: int) -> bool:
        nonlocal found
        last = path[-1]
        not_closing_pair = path_mask & ~(1 << path[0]) & ~(1 << last)
        cand = rows[last] & allowed
        length = len(path)
        can_close = 4 <= length + 1 <= effective
        can_extend = length + 2 <= effective
        v1 = path[1]
        child_allowed = allowed & ~rows[last]
        not_last = path_mask & ~(1 << last)
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if row_s >> x & 1:
                if can_close and v1 < x:
                    # Non-adjacent partners of x on the would-be cycle are
                    # everything but the two closing neighbors.
                    if not sd_row(x) & not_closing_pair:
                        found = InducedCycle(tuple(path) + (x,))
                        return False
            elif can_extend:
                if sd_row(x) & not_last:
                    continue  # SD pair joined the path: all closings burst
                path.append(x)
                ok = walk(path, path_mask | low, child_allowed & ~low, row_s)
                path.pop()
                if not ok:
                    return False
        return True

    n_starts = n if start_below is None else min(start_below, n)
    for s in range(n_starts):
        row_s = rows[s]
        above = -1 << (s + 1)
        starters = row_s & above
        while starters:
            low = starters & -starters
            starters ^= low
            v1 = low.bit_length() - 1
            if not walk([s, v1], 1 << s | low, above & ~low, row_s):
                return found
    return None


def check_tran_condition(
    g: Graph,
    max_len: int | None = None,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    early_exit: bool = False,
) -> TranVerdict:
    """Decide whether every induced cycle of length in [4, max_len] is burst.

    Default ``max_len`` is n, a complete check.  With ``early_exit`` the
    enumeration stops at the first non-burst cycle.  The witness list is
    capped at ``witness_cap`` but the boolean verdict never depends on
    the cap.  Length-3 cycles are outside the condition and skipped.
    """
    n = g.n
    effective = n if max_len is None else min(max_len, n)
    truncated = effective < n
    witness_cap = max(1, witness_cap)
    rows = g.rows
    non_burst: list[InducedCycle] = []

    sd_cache: list[int | None] = [None] * n

    def sd_row(u: int) -> int:
        row = sd_cache[u]
        if row is None:
            row = sd_cache[u] = _sd_row(rows, n, u)
        return row

    def on_cycle(path: list[int], x: int) -> bool | None:
        cmask = 1 << x
        for v in path:
            cmask |= 1 << v
        if sd_row(x) & cmask & ~rows[x] & ~(1 << x):
            return None
        for v in path:
            if sd_row(v) & cmask & ~rows[v] & ~(1 << v):
                return None
        if len(non_burst) < witness_cap:
            non_burst.append(InducedCycle(tuple(path) + (x,)))
        if early_exit:
            return False
        return None

    stats: EnumerationStats = visit_induced_paths(
        g, min_len=4, max_len=effective, on_cycle=on_cycle
    )
    return TranVerdict(
        all_burst=not non_burst,
        non_burst_cycles=tuple(non_burst),
        counts=stats.counts,
        truncated=truncated,
    )
