import pytest
from hypothesis import given, settings, strategies as st

from binedge.errors import InvalidArgument
from binedge.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    connected_components,
    delete_vertices,
    is_connected,
    num_components,
)


def test_single_edge():
    g = complete_bipartite(1, 1)
    assert g.num_vertices == 2
    assert g.sorted_edges() == [(1, 2)]


def test_labeling_small_part_first():
    g = complete_bipartite(3, 2)
    assert g.num_vertices == 5
    assert len(g.edges) == 6
    assert g.partition == (frozenset({1, 2}), frozenset({3, 4, 5}))
    assert g.part_sizes == (3, 2)
    assert not g.swapped


def test_swap_is_normalised_and_recorded():
    a, b = complete_bipartite(3, 2), complete_bipartite(2, 3)
    assert b.swapped
    assert (a.edges, a.partition) == (b.edges, b.partition)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (-2, 3), (1.5, 1)])
def test_bad_part_sizes(m, n):
    with pytest.raises(InvalidArgument):
        complete_bipartite(m, n)


@pytest.mark.parametrize("r,edges", [(1, 0), (2, 1), (4, 6), (6, 15)])
def test_complete_graph_edge_count(r, edges):
    assert len(complete_graph(r).edges) == edges


def test_complete_graph_rejects_zero():
    with pytest.raises(InvalidArgument):
        complete_graph(0)


def test_delete_one_part():
    h = delete_vertices(complete_bipartite(2, 2), {1, 2})
    assert h.vertices == {3, 4}
    assert not h.edges
    assert connected_components(h) == [frozenset({3}), frozenset({4})]


def test_delete_centre_of_star():
    h = delete_vertices(complete_bipartite(3, 1), {1})
    assert len(connected_components(h)) == 3


def test_delete_nothing_is_identity():
    g = complete_bipartite(2, 2)
    assert delete_vertices(g, set()) is g


def test_delete_unknown_vertex():
    with pytest.raises(InvalidArgument):
        delete_vertices(complete_bipartite(1, 1), {7})


def test_components():
    assert connected_components(complete_bipartite(2, 2)) == [frozenset({1, 2, 3, 4})]
    assert connected_components(Graph(0, frozenset())) == []
    assert is_connected(complete_bipartite(4, 3))


def test_graph_validation():
    with pytest.raises(InvalidArgument):
        Graph(3, frozenset({(2, 1)}))
    with pytest.raises(InvalidArgument):
        Graph(2, frozenset({(1, 3)}))
    with pytest.raises(InvalidArgument):
        Graph(3, frozenset({(1, 2)}), (frozenset({1}), frozenset({2, 3})))


@pytest.mark.parametrize("m", range(1, 7))
def test_removing_a_part_leaves_singletons(m):
    for n in range(1, m + 1):
        g = complete_bipartite(m, n)
        p1, p2 = g.partition
        assert num_components(g, p1) == m
        assert num_components(g, p2) == n


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 9))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, frozenset(edges))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    union = set()
    for c in comps:
        assert not union & c
        union |= c
    assert union == g.vertices
    for i, j in g.edges:
        assert any(i in c and j in c for c in comps)
