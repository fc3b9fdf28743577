import pytest

from colorref import (
    Graph,
    Original,
    VirtualEdge,
    degree,
    expand_edges,
    new_graph,
    random_graph,
)
from conftest import complete_graph, cycle_graph, path_graph, star_graph


def test_triangle_construction():
    g = new_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.vertex_count == 3
    assert g.edge_count == 3
    assert all(degree(g, v) == 2 for v in range(3))


def test_single_isolated_vertex():
    g = new_graph(1, [])
    assert g.adjacency == ((),)
    assert degree(g, 0) == 0


def test_duplicate_edges_collapse():
    g = new_graph(4, [(0, 1), (1, 2), (2, 3), (0, 1)])
    assert [degree(g, v) for v in range(4)] == [1, 2, 2, 1]
    assert g.edge_count == 3


def test_edge_order_and_orientation_do_not_matter():
    a = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    b = new_graph(4, [(3, 2), (1, 0), (2, 1)])
    assert a == b


def test_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        new_graph(3, [(1, 1)])


def test_rejects_out_of_range_ids():
    with pytest.raises(ValueError):
        new_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        new_graph(3, [(-1, 0)])


def test_graph_validation_catches_bad_adjacency():
    with pytest.raises(ValueError, match="reverse"):
        Graph(2, ((1,), ()))
    with pytest.raises(ValueError, match="increasing"):
        Graph(2, ((1, 1), (0, 0)))


def test_degree_star():
    g = star_graph(4)
    assert degree(g, 0) == 4
    assert degree(g, 1) == 1
    with pytest.raises(ValueError):
        degree(g, 5)


def test_edges_are_sorted_pairs():
    g = new_graph(4, [(2, 0), (3, 1), (1, 0)])
    assert g.edges() == [(0, 1), (0, 2), (1, 3)]


def test_expand_single_edge_gives_three_path():
    e = expand_edges(new_graph(2, [(0, 1)]))
    assert e.graph == Graph(3, ((2,), (2,), (0, 1)))
    assert e.origin == (Original(0), Original(1), VirtualEdge((0, 1)))


def test_expand_triangle_gives_six_cycle():
    e = expand_edges(complete_graph(3))
    g = e.graph
    assert g.vertex_count == 6
    assert g.edge_count == 6
    assert all(degree(g, v) == 2 for v in range(6))
    # originals 0..2 and virtuals 3..5 alternate around the cycle
    for v in range(3):
        assert all(u >= 3 for u in g.adjacency[v])
    assert e.virtual_edges == [(0, 1), (0, 2), (1, 2)]


def test_expand_path4():
    g = path_graph(4)
    e = expand_edges(g)
    assert e.graph.vertex_count == 7
    assert e.graph.edge_count == 6
    assert e.virtual_edges == [(0, 1), (1, 2), (2, 3)]
    # subdivision is a path again: 0-4-1-5-2-6-3
    assert e.graph.adjacency == ((4,), (4, 5), (5, 6), (6,), (0, 1), (1, 2), (2, 3))


def test_expand_counts_and_projection():
    g = random_graph(12, 0.4, 3)
    e = expand_edges(g)
    m = g.edge_count
    assert e.graph.vertex_count == g.vertex_count + m
    assert e.graph.edge_count == 2 * m
    for i, (u, v) in enumerate(e.virtual_edges):
        w = g.vertex_count + i
        assert e.graph.adjacency[w] == (u, v)
    assert sorted(e.virtual_edges) == g.edges()


def test_expand_is_deterministic():
    g = random_graph(9, 0.5, 11)
    assert expand_edges(g) == expand_edges(g)


def test_random_graph_extremes():
    assert random_graph(5, 0, 1).edge_count == 0
    assert random_graph(5, 1, 1) == complete_graph(5)


def test_random_graph_deterministic():
    assert random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42)


def test_random_graph_rejects_bad_probability():
    with pytest.raises(ValueError):
        random_graph(4, 1.5, 0)
    with pytest.raises(ValueError):
        random_graph(4, -0.1, 0)


def test_cycle_builder_sanity():
    g = cycle_graph(4)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
