"""Induced (chordless) cycle enumeration.

Two independent routes are provided on purpose.  The fast path is a
backtracking search extending induced paths from a canonical least
vertex; the oracle inspects every vertex subset and keeps those inducing
a connected 2-regular subgraph.  Tests hold the two equal on exhaustive
small corpora; the oracle never shares code with the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .graph import Graph, GraphError, bits


@dataclass(frozen=True, slots=True)
class InducedCycle:
    """A chordless cycle, stored in canonical rotation.

    ``vertices`` = (v0, .., v(k-1)) with consecutive vertices adjacent
    cyclically, non-consecutive ones non-adjacent, v0 the minimum index
    on the cycle, and v1 < v(k-1) to fix the direction.
    """

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    def labels(self, g: Graph) -> tuple[str, ...]:
        return tuple(g.labels[v] for v in self.vertices)


def canonical_cycle(seq: Iterable[int]) -> InducedCycle:
    """Canonicalize a cyclic vertex sequence (rotation and reflection)."""
    vs = tuple(seq)
    k = len(vs)
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    if len(set(vs)) != k:
        raise GraphError("cycle repeats a vertex")
    start = vs.index(min(vs))
    rotated = vs[start:] + vs[:start]
    if rotated[1] > rotated[-1]:
        rotated = rotated[:1] + rotated[:0:-1]
    return InducedCycle(rotated)


def validate_cycle(g: Graph, c: InducedCycle) -> None:
    """Re-verify every InducedCycle invariant against ``g``; raise on failure."""
    vs = c.vertices
    k = len(vs)
    if k < 3:
        raise GraphError("induced cycle shorter than 3")
    if len(set(vs)) != k:
        raise GraphError("cycle repeats a vertex")
    for i, v in enumerate(vs):
        if not 0 <= v < g.n:
            raise GraphError(f"cycle vertex {v} out of range")
        nxt = vs[(i + 1) % k]
        if not g.adjacent(v, nxt):
            raise GraphError(f"consecutive cycle vertices {v}, {nxt} not adjacent")
    for i, j in combinations(range(k), 2):
        if (j - i) % k in (1, k - 1):
            continue
        if g.adjacent(vs[i], vs[j]):
            raise GraphError(f"chord {vs[i]}-{vs[j]} inside cycle")
    if vs[0] != min(vs) or (k > 2 and vs[1] > vs[-1]):
        raise GraphError("cycle not in canonical rotation")


@dataclass(slots=True)
class EnumerationStats:
    """Counts per cycle length plus whether the visitor stopped the walk."""

    counts: dict[int, int]
    stopped_early: bool = False

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def enumerate_induced_cycles(
    g: Graph,
    min_len: int = 3,
    max_len: int | None = None,
    visitor: Callable[[InducedCycle], object] | None = None,
) -> EnumerationStats:
    """Visit every induced cycle with min_len <= length <= max_len once.

    Cycles arrive in canonical form, ordered lexicographically by their
    canonical vertex sequence.  The visitor may return False to stop the
    enumeration; anything else continues it.

    The search grows induced paths from each start vertex s using only
    vertices above s.  A candidate adjacent to any non-endpoint path
    vertex would create a chord and is excluded; a candidate adjacent to
    the start closes a cycle and is never extended further.
    """
    n = g.n
    if max_len is None:
        max_len = n
    max_len = min(max_len, n)
    if min_len < 3:
        raise GraphError(f"min_len must be at least 3, got {min_len}")
    if min_len > max_len:
        return EnumerationStats({})

    if visitor is None:
        on_cycle = None
    else:
        def on_cycle(path: list[int], x: int):
            return visitor(InducedCycle(tuple(path) + (x,)))

    return visit_induced_paths(g, min_len, max_len, on_cycle)


def visit_induced_paths(
    g: Graph,
    min_len: int,
    max_len: int,
    on_cycle: Callable[[list[int], int], object] | None,
    start_below: int | None = None,
) -> EnumerationStats:
    """Backtracking engine behind :func:`enumerate_induced_cycles`.

    ``on_cycle`` receives the raw growing path plus the closing vertex;
    their concatenation is the cycle, already in canonical form, and the
    list must not be mutated or kept.  Returning False stops the walk.
    ``start_below`` restricts start vertices to indices below it; the
    start is the minimum of every cycle it emits, so this visits exactly
    the cycles whose minimum vertex lies in that range.  Callers use it
    when they can prove the skipped cycles irrelevant.
    """
    rows = g.rows
    counts: dict[int, int] = {}

    def walk(path: list[int], allowed: int, row_s: int) -> bool:
        """Extend the induced path; returns False when the caller stopped.

        ``allowed`` holds the vertices still usable: above the start, off
        the path, and non-adjacent to every interior path vertex.
        Candidates adjacent to the start close a cycle (and are never
        extended, which would create a chord); the rest extend the path.
        Candidates are taken in ascending order and closings emitted in
        place, so cycles stream out in lexicographic canonical order.
        """
        last = path[-1]
        cand = rows[last] & allowed
        length = len(path)
        can_close = min_len <= length + 1 <= max_len
        can_extend = length + 2 <= max_len
        v1 = path[1]
        child_allowed = allowed & ~rows[last]
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            if row_s >> x & 1:
                if can_close and v1 < x:
                    k = length + 1
                    counts[k] = counts.get(k, 0) + 1
                    if on_cycle is not None:
                        if on_cycle(path, x) is False:
                            return False
            elif can_extend:
                path.append(x)
                ok = walk(path, child_allowed & ~low, row_s)
                path.pop()
                if not ok:
                    return False
        return True

    n_starts = g.n if start_below is None else min(start_below, g.n)
    for s in range(n_starts):
        row_s = rows[s]
        above = -1 << (s + 1)
        starters = row_s & above
        while starters:
            low = starters & -starters
            starters ^= low
            v1 = low.bit_length() - 1
            if not walk([s, v1], above & ~low, row_s):
                return EnumerationStats(counts, True)
    return EnumerationStats(counts, False)


def brute_force_induced_cycles(
    g: Graph, max_len: int | None = None, min_len: int = 3
) -> list[InducedCycle]:
    """Oracle enumeration: a vertex subset is an induced cycle iff its
    induced subgraph is connected and 2-regular.

    Inspects all subsets of size min_len..max_len, so keep n small
    (n <= 16 enforced).  Output canonicalized and sorted.
    """
    n = g.n
    if n > 16:
        raise GraphError(f"brute force oracle limited to n <= 16, got n={n}")
    if max_len is None:
        max_len = n
    max_len = min(max_len, n)
    rows = g.rows
    found = []
    for k in range(max(3, min_len), max_len + 1):
        for subset in combinations(range(n), k):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if any((rows[v] & mask).bit_count() != 2 for v in subset):
                continue
            # connectivity walk within the subset
            seen = 1 << subset[0]
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= rows[v] & mask & ~seen
                seen |= nxt
                frontier = nxt
            if seen != mask:
                continue
            # 2-regular and connected: trace the cyclic order
            seq = [subset[0]]
            prev = -1
            while len(seq) < k:
                nbrs = [u for u in bits(rows[seq[-1]] & mask) if u != prev]
                prev = seq[-1]
                seq.append(nbrs[0])
            found.append(canonical_cycle(seq))
    found.sort(key=lambda c: c.vertices)
    return found
