"""Doubling a graph over a vertex subset, and the star-double construction.

Doubling over S glues two copies of the graph along the induced subgraph
on S.  Doubling over the star of a vertex x and then deleting x produces
the defining graph of an index-2 reflection subgroup of the right-angled
Coxeter group presented by the input; combinatorially this module only
builds the graph and its provenance map, no group arithmetic happens
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .burst import TranVerdict, check_tran_condition
from .graph import Graph, GraphError, _check_vertex
from .generators import canonical_form

SHARED = "shared"
COPY1 = "copy1"
COPY2 = "copy2"

ISO_DEDUP_LIMIT = 12


def double_over(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[tuple[str, int], ...]]:
    """Two copies of ``g`` glued along the induced subgraph on ``s``.

    Result vertex order: shared vertices (ascending original index, labels
    kept), then copy 1 and copy 2 of the rest (labels suffixed "#1" and
    "#2").  Adjacency: edges of g inside s, between s and each copy, and
    inside each copy; never between the two copies.

    Returns the graph and an origin map: for each result vertex, a pair
    (copy, original index) with copy one of "shared", "copy1", "copy2".
    Doubling over all of V returns g itself; doubling over the empty set
    returns two disjoint copies.
    """
    shared = sorted(set(s))
    for v in shared:
        _check_vertex(g, v)
    shared_mask = 0
    for v in shared:
        shared_mask |= 1 << v
    outside = [v for v in range(g.n) if not shared_mask >> v & 1]
    origin: list[tuple[str, int]] = [(SHARED, v) for v in shared]
    if not outside:
        # s = V(g): the double is g itself, labels untouched.
        return Graph(g.labels, g.rows), tuple(origin)

    labels = [g.labels[v] for v in shared]
    origin += [(COPY1, v) for v in outside] + [(COPY2, v) for v in outside]
    labels += [g.labels[v] + "#1" for v in outside] + [
        g.labels[v] + "#2" for v in outside
    ]

    # Remap each original neighborhood once: bits landing in the shared
    # block and bits landing in an outside block (relative positions).
    k = len(shared)
    t = len(outside)
    pos = [0] * g.n
    for i, v in enumerate(shared):
        pos[v] = i
    for j, v in enumerate(outside):
        pos[v] = j

    def split_row(u: int) -> tuple[int, int]:
        sh_part = out_part = 0
        row = g.rows[u]
        sh = row & shared_mask
        while sh:
            low = sh & -sh
            sh ^= low
            sh_part |= 1 << pos[low.bit_length() - 1]
        out = row & ~shared_mask
        while out:
            low = out & -out
            out ^= low
            out_part |= 1 << pos[low.bit_length() - 1]
        return sh_part, out_part

    rows = []
    for v in shared:
        sh_part, out_part = split_row(v)
        rows.append(sh_part | out_part << k | out_part << (k + t))
    copy1_rows = []
    copy2_rows = []
    for v in outside:
        sh_part, out_part = split_row(v)
        copy1_rows.append(sh_part | out_part << k)
        copy2_rows.append(sh_part | out_part << (k + t))
    rows.extend(copy1_rows)
    rows.extend(copy2_rows)
    return Graph(tuple(labels), tuple(rows)), tuple(origin)


@dataclass(frozen=True, slots=True)
class DoubleResult:
    """Star-double-minus output: the new graph plus provenance.

    ``origin`` maps each result vertex index to (copy, original index);
    ``center_label`` names the deleted vertex, which no longer exists in
    ``graph``.  Shared vertices are exactly the link of the center.
    """

    graph: Graph
    origin: tuple[tuple[str, int], ...]
    center_label: str

    def origin_json(self, source: Graph) -> dict[str, list[str]]:
        return {
            self.graph.labels[i]: [copy, source.labels[orig]]
            for i, (copy, orig) in enumerate(self.origin)
        }


def star_double_minus(g: Graph, x: int) -> DoubleResult:
    """Double ``g`` over star(x), then delete x.

    Equal to ``delete_vertex(double_over(g, star(g, x)), x)`` with the
    origin map restricted, but built directly: the result is two copies
    of g minus x glued along link(x).  Shared link vertices keep their
    labels and come first (ascending original index); the copy blocks
    follow.  The result has 2n - deg(x) - 2 vertices, and swapping the
    two copies while fixing the shared vertices is an automorphism.
    """
    _check_vertex(g, x)
    row_x = g.rows[x]
    shared: list[int] = []
    outside: list[int] = []
    for v in range(g.n):
        if v == x:
            continue
        (shared if row_x >> v & 1 else outside).append(v)

    k = len(shared)
    t = len(outside)
    pos = [0] * g.n
    for i, v in enumerate(shared):
        pos[v] = i
    for j, v in enumerate(outside):
        pos[v] = j
    x_bit = 1 << x

    def split_row(u: int) -> tuple[int, int]:
        sh_part = out_part = 0
        sh = g.rows[u] & row_x
        while sh:
            low = sh & -sh
            sh ^= low
            sh_part |= 1 << pos[low.bit_length() - 1]
        out = g.rows[u] & ~row_x & ~x_bit
        while out:
            low = out & -out
            out ^= low
            out_part |= 1 << pos[low.bit_length() - 1]
        return sh_part, out_part

    rows: list[int] = []
    for v in shared:
        sh_part, out_part = split_row(v)
        rows.append(sh_part | out_part << k | out_part << (k + t))
    copy2_rows: list[int] = []
    for v in outside:
        sh_part, out_part = split_row(v)
        rows.append(sh_part | out_part << k)
        copy2_rows.append(sh_part | out_part << (k + t))
    rows.extend(copy2_rows)

    labels = (
        [g.labels[v] for v in shared]
        + [g.labels[v] + "#1" for v in outside]
        + [g.labels[v] + "#2" for v in outside]
    )
    origin = (
        [(SHARED, v) for v in shared]
        + [(COPY1, v) for v in outside]
        + [(COPY2, v) for v in outside]
    )
    return DoubleResult(
        graph=Graph(tuple(labels), tuple(rows)),
        origin=tuple(origin),
        center_label=g.labels[x],
    )


def copy_swap_permutation(res: DoubleResult) -> tuple[int, ...]:
    """The involution exchanging copy1 and copy2 and fixing shared vertices."""
    where: dict[tuple[str, int], int] = {
        key: i for i, key in enumerate(res.origin)
    }
    flip = {COPY1: COPY2, COPY2: COPY1, SHARED: SHARED}
    return tuple(
        where[(flip[copy], orig)] for copy, orig in res.origin
    )


@dataclass(frozen=True, slots=True)
class DoubleStep:
    """One edge of a derivation path: which vertex was doubled over, and
    the vertex count of the resulting graph."""

    vertex_label: str
    result_n: int


@dataclass(slots=True)
class ExplorationNode:
    """One graph reached by iterated star-doubling.

    ``graph`` is None for branches skipped at the size bound; ``n`` is
    always the (would-be) vertex count.
    """

    path: tuple[DoubleStep, ...]
    n: int
    graph: Graph | None
    verdict: TranVerdict | None
    skipped: str | None = None

    def to_json_dict(self) -> dict:
        entry: dict = {
            "path": [[step.vertex_label, step.result_n] for step in self.path],
            "n": self.n,
        }
        if self.skipped is not None:
            entry["skipped"] = self.skipped
        else:
            assert self.verdict is not None and self.graph is not None
            entry["verdict"] = self.verdict.to_json_dict(self.graph)
        return entry


def iterate_doubles(
    g: Graph,
    depth: int,
    vertices: Sequence[str] | None = None,
    max_n: int = 64,
    max_len: int | None = None,
) -> list[ExplorationNode]:
    """Breadth-first star-double exploration up to ``depth`` applications.

    Every reached graph (the root included, with an empty path) is
    checked with :func:`check_tran_condition`.  ``vertices`` restricts
    doubling to the listed labels; None doubles over every vertex.
    Results isomorphic to an earlier one are dropped while graphs stay
    small enough for certificate dedup (n <= 12); beyond that, branches
    are kept distinct.  Branches exceeding ``max_n`` vertices are
    recorded as skipped instead of aborting the exploration.
    """
    if depth < 1:
        raise GraphError(f"depth must be at least 1, got {depth}")
    out: list[ExplorationNode] = []
    seen: set[bytes] = set()

    def record(path: tuple[DoubleStep, ...], graph: Graph) -> ExplorationNode:
        node = ExplorationNode(
            path=path,
            n=graph.n,
            graph=graph,
            verdict=check_tran_condition(graph, max_len=max_len),
        )
        out.append(node)
        return node

    root = record((), g)
    if g.n <= ISO_DEDUP_LIMIT:
        seen.add(canonical_form(g))
    frontier = [root]
    for _ in range(depth):
        next_frontier: list[ExplorationNode] = []
        for node in frontier:
            src = node.graph
            for v in range(src.n):
                if vertices is not None and src.labels[v] not in vertices:
                    continue
                step_result_n = 2 * src.n - src.degree(v) - 2
                path = node.path + (DoubleStep(src.labels[v], step_result_n),)
                if step_result_n > max_n:
                    out.append(
                        ExplorationNode(
                            path=path,
                            n=step_result_n,
                            graph=None,
                            verdict=None,
                            skipped=f"size limit: result would have n={step_result_n} > {max_n}",
                        )
                    )
                    continue
                child = star_double_minus(src, v).graph
                if child.n <= ISO_DEDUP_LIMIT:
                    cert = canonical_form(child)
                    if cert in seen:
                        continue
                    seen.add(cert)
                next_frontier.append(record(path, child))
        frontier = next_frontier
    return out
