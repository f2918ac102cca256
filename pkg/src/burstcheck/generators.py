"""Graph constructors: fixtures, random graphs, and exhaustive small corpora.

The exhaustive generator enumerates one representative per isomorphism
class by extending each (n-1)-vertex representative with every possible
neighborhood for a new vertex and deduplicating on a canonical
certificate.  It is meant for the small orders the test corpora need
(n <= 8 or so), not for bulk generation.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph, GraphError, bits, default_labels, graph_from_edges


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices labeled "0".."n-1" in cyclic order."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(default_labels(n), [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return graph_from_edges(default_labels(n), edges)


def gen_path(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    return graph_from_edges(default_labels(n), [(i, i + 1) for i in range(n - 1)])


def gen_hypercube(d: int) -> Graph:
    """d-dimensional hypercube; vertices labeled by their d-bit strings."""
    if d < 0:
        raise GraphError(f"dimension must be nonnegative, got {d}")
    n = 1 << d
    labels = tuple(format(i, f"0{d}b") if d else "0" for i in range(n))
    edges = [(i, i ^ (1 << k)) for i in range(n) for k in range(d) if i < i ^ (1 << k)]
    return graph_from_edges(labels, edges)


def gen_random(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) sample from the caller's RNG."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return graph_from_edges(default_labels(n), edges)


# -- canonical certificates ------------------------------------------------

def _refine_colors(rows: tuple[int, ...]) -> list[int]:
    """Iterated neighbor-color refinement; returns a stable coloring.

    Color ids are ranks of sorted signatures, so they are isomorphism
    invariant and usable to restrict the canonical labeling search.
    """
    n = len(rows)
    colors = [rows[v].bit_count() for v in range(n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in bits(rows[v]))))
            for v in range(n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = [ranking[signatures[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant certificate: equal iff the graphs are isomorphic.

    Positions are filled class by class (refined colors, ascending); at
    each position only the vertices realizing the minimal adjacency word
    against the placed prefix are explored, which yields the
    lexicographically smallest compatible adjacency encoding directly.
    """
    n = g.n
    if n == 0:
        return b""
    rows = g.rows
    colors = _refine_colors(rows)
    class_of_position = sorted(colors)
    word_bytes = (n + 7) // 8

    best: list[int] | None = None
    placed: list[int] = []
    prefix: list[int] = []

    def search(pos: int, free: int, tied: bool) -> None:
        nonlocal best
        if pos == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        want = class_of_position[pos]
        min_word = None
        chosen: list[int] = []
        for v in bits(free):
            if colors[v] != want:
                continue
            row = rows[v]
            word = 0
            for k, u in enumerate(placed):
                word |= (row >> u & 1) << k
            if min_word is None or word < min_word:
                min_word = word
                chosen = [v]
            elif word == min_word:
                chosen.append(v)
        assert min_word is not None
        if tied and best is not None:
            if min_word > best[pos]:
                return
            tied = min_word == best[pos]
        prefix.append(min_word)
        for v in chosen:
            placed.append(v)
            search(pos + 1, free & ~(1 << v), tied)
            placed.pop()
        prefix.pop()

    search(0, (1 << n) - 1, True)
    assert best is not None
    out = bytearray(n.to_bytes(4, "little"))
    for word in best:
        out.extend(word.to_bytes(word_bytes, "little"))
    return bytes(out)


def are_isomorphic(g: Graph, h: Graph, max_n: int = 12) -> bool:
    """Brute-force isomorphism with degree-partition pruning.

    Test plumbing for small graphs.  The default size limit keeps callers
    honest; raise ``max_n`` explicitly when a larger one-off check is
    justified.
    """
    if g.n > max_n or h.n > max_n:
        raise GraphError(f"are_isomorphic limited to n <= {max_n}")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    hdeg = [h.degree(v) for v in range(n)]
    image: list[int] = []
    used = [False] * n

    def assign(u: int) -> bool:
        if u == n:
            return True
        du = g.degree(u)
        gu = g.rows[u]
        for w in range(n):
            if used[w] or hdeg[w] != du:
                continue
            ok = True
            for prev in range(u):
                if (gu >> prev & 1) != (h.rows[image[prev]] >> w & 1):
                    ok = False
                    break
            if ok:
                used[w] = True
                image.append(w)
                if assign(u + 1):
                    return True
                image.pop()
                used[w] = False
        return False

    return assign(0)


def nonisomorphic_graphs(n: int) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of graphs on n vertices.

    Deterministic order (sorted certificates per order).  Exponential: use
    only for small n.  Known class counts, for cross-checking: 1, 1, 2, 4,
    11, 34, 156, 1044, 12346 for n = 0..8.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    reps: dict[bytes, Graph] = {Graph((), ()).labels and b"" or b"": Graph((), ())}
    reps = {b"": Graph((), ())}
    for size in range(1, n + 1):
        next_reps: dict[bytes, Graph] = {}
        labels = default_labels(size)
        for parent in reps.values():
            base_rows = parent.rows
            for nbrs in range(1 << (size - 1)):
                rows = [r | ((nbrs >> v & 1) << (size - 1)) for v, r in enumerate(base_rows)]
                rows.append(nbrs)
                candidate = Graph(labels, tuple(rows))
                cert = canonical_form(candidate)
                if cert not in next_reps:
                    next_reps[cert] = candidate
        reps = next_reps
    for cert in sorted(reps):
        yield reps[cert]
