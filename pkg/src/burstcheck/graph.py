"""Finite simple graphs with bitset adjacency.

Vertices are integer indices 0..n-1; each vertex owns a bit row (a Python
int) whose bit u is set iff the vertex is adjacent to u.  Python ints are
arbitrary precision, so the same representation covers both the fast
small-graph tier (n <= 64, single machine word) and anything larger.
Labels are a sidecar for I/O; all algorithms work on indices.

Graphs are immutable.  Every operation returns a new Graph, so values can
be shared freely across threads and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph data or an invalid vertex argument."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph: unique string labels plus one bit row per vertex.

    Invariants (see :func:`validate`): the adjacency relation is symmetric
    and irreflexive, and labels are unique.
    """

    labels: tuple[str, ...]
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, sorted."""
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1) << (u + 1)):
                yield (u, v)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labeled {label!r}") from None

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.edge_count})"


def graph_from_edges(
    labels: Iterable[str], edges: Iterable[tuple[int, int]]
) -> Graph:
    """Build a Graph from vertex labels and index edge pairs.

    Duplicate edges are idempotent.  Self loops raise :class:`GraphError`.
    """
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise GraphError("vertex labels must be unique")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(labels, tuple(rows))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def validate(g: Graph) -> None:
    """Check symmetry, irreflexivity, label uniqueness, and row bounds.

    Raises :class:`GraphError` on the first violation.  Cheap enough to run
    inside tests on every constructed graph.
    """
    n = g.n
    if len(g.labels) != n:
        raise GraphError("label count does not match row count")
    if len(set(g.labels)) != n:
        raise GraphError("vertex labels must be unique")
    full = (1 << n) - 1
    for v, row in enumerate(g.rows):
        if row & ~full:
            raise GraphError(f"row {v} has bits beyond n={n}")
        if row >> v & 1:
            raise GraphError(f"self loop at vertex {v}")
        for u in bits(row):
            if not g.rows[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")


def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise GraphError(f"invalid vertex {v!r} for graph with n={g.n}")


def star(g: Graph, v: int) -> frozenset[int]:
    """Closed neighborhood: N(v) together with v itself."""
    _check_vertex(g, v)
    return frozenset(bits(g.rows[v] | 1 << v))


def link(g: Graph, v: int) -> frozenset[int]:
    """Open neighborhood N(v), i.e. the star minus the vertex."""
    _check_vertex(g, v)
    return frozenset(bits(g.rows[v]))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep``, vertices in ascending index order.

    Labels are preserved.  Exactly the edges of g between kept vertices
    survive.
    """
    order = sorted(set(keep))
    for v in order:
        _check_vertex(g, v)
    pos = [0] * g.n
    keep_mask = 0
    for i, v in enumerate(order):
        pos[v] = i
        keep_mask |= 1 << v
    rows = []
    for v in order:
        row = 0
        kept = g.rows[v] & keep_mask
        while kept:
            low = kept & -kept
            kept ^= low
            row |= 1 << pos[low.bit_length() - 1]
        rows.append(row)
    return Graph(tuple(g.labels[v] for v in order), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph on V minus {v}."""
    _check_vertex(g, v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))
