import pytest

from burstcheck import (
    GraphError,
    delete_vertex,
    gen_complete,
    gen_cycle,
    gen_hypercube,
    gen_random,
    graph_from_edges,
    induced_subgraph,
    link,
    star,
    validate,
)

from conftest import assert_valid


def test_graph_from_edges_basics():
    g = graph_from_edges(["a", "b", "c"], [(0, 1), (1, 2), (0, 1)])
    assert_valid(g)
    assert g.n == 3
    assert g.edge_count == 2  # duplicate edge idempotent
    assert g.adjacent(0, 1) and g.adjacent(1, 0)
    assert not g.adjacent(0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_graph_from_edges_rejects_loops_and_dup_labels():
    with pytest.raises(GraphError):
        graph_from_edges(["a", "b"], [(0, 0)])
    with pytest.raises(GraphError):
        graph_from_edges(["a", "a"], [])


def test_star_and_link():
    c5 = gen_cycle(5)
    assert star(c5, 1) == {0, 1, 2}
    assert link(c5, 1) == {0, 2}
    k4 = gen_complete(4)
    assert star(k4, 2) == {0, 1, 2, 3}
    lonely = graph_from_edges(["v"], [])
    assert star(lonely, 0) == {0}
    assert link(lonely, 0) == set()


def test_link_is_star_minus_center(rng):
    for _ in range(50):
        g = gen_random(rng.randint(1, 12), rng.random(), rng)
        for v in range(g.n):
            assert link(g, v) == star(g, v) - {v}


def test_star_invalid_vertex():
    with pytest.raises(GraphError):
        star(gen_cycle(3), 5)


def test_induced_subgraph_examples():
    q3 = gen_hypercube(3)
    face = [q3.labels.index(l) for l in ("000", "001", "011", "010")]
    sub = induced_subgraph(q3, face)
    assert sub.n == 4 and sub.edge_count == 4
    assert sorted(sub.degree(v) for v in range(4)) == [2, 2, 2, 2]

    g = gen_complete(5)
    assert induced_subgraph(g, range(5)) == g
    assert induced_subgraph(g, [0, 1, 2, 3]).edge_count == 6


def test_delete_vertex_examples():
    path = delete_vertex(gen_cycle(4), 0)
    assert path.n == 3 and path.edge_count == 2
    assert delete_vertex(graph_from_edges(["v"], []), 0).n == 0


def test_delete_vertex_edge_bookkeeping(rng):
    for _ in range(50):
        g = gen_random(rng.randint(1, 12), rng.random(), rng)
        v = rng.randrange(g.n)
        assert delete_vertex(g, v).edge_count == g.edge_count - g.degree(v)


def test_delete_equals_induced_complement(rng):
    # star/link/delete compose exactly
    for _ in range(50):
        g = gen_random(rng.randint(1, 10), rng.random(), rng)
        v = rng.randrange(g.n)
        kept = [u for u in range(g.n) if u != v]
        assert delete_vertex(g, v) == induced_subgraph(g, kept)


def test_generators():
    q3 = gen_hypercube(3)
    assert_valid(q3)
    assert q3.n == 8 and q3.edge_count == 12
    assert set(q3.degree_sequence()) == {3}
    assert q3.labels[0] == "000" and q3.labels[7] == "111"

    c5 = gen_cycle(5)
    assert_valid(c5)
    assert c5.degree_sequence() == (2, 2, 2, 2, 2) and c5.edge_count == 5

    assert gen_complete(4).edge_count == 6
    assert gen_hypercube(0).n == 1

    with pytest.raises(GraphError):
        gen_cycle(2)


def test_validator_runs_on_generated(rng):
    for _ in range(100):
        assert_valid(gen_random(rng.randint(0, 20), rng.random(), rng))
