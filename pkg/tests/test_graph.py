import numpy as np
import networkx as nx
import pytest

from model.family import make_complete, make_cycle, make_path, make_star
from model.graph import (
    Graph,
    GraphError,
    complement,
    components,
    degree_sequence,
    delete_vertex,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    is_connected,
    is_regular,
    iter_bits,
)


def test_graph_from_edges_collapses_duplicates():
    g = graph_from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.neighbors(1) == (0, 2)
    assert g.degree(1) == 2
    assert g.adjacent(2, 1) and not g.adjacent(0, 2)


@pytest.mark.parametrize("n, edges", [
    (3, [(0, 3)]),
    (3, [(-1, 0)]),
    (3, [(1, 1)]),
    (0, []),
    (63, []),
])
def test_graph_from_edges_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        graph_from_edges(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0b00])


def test_graph_rejects_self_loop_rows():
    with pytest.raises(GraphError):
        Graph(2, [0b11, 0b01])


def test_equality_and_hash():
    assert make_path(4) == graph_from_edges(4, [(2, 3), (0, 1), (1, 2)])
    assert len({make_path(4), make_path(4), make_cycle(4)}) == 2


def test_is_connected():
    assert is_connected(graph_from_edges(1, []))
    assert is_connected(make_path(6))
    assert not is_connected(empty_graph(2))
    assert not is_connected(disjoint_union(make_cycle(3), make_cycle(3)))


def test_complement_of_p4_is_p4_relabelled(to_nx):
    co = complement(make_path(4))
    assert co.edge_count == 3
    assert nx.is_isomorphic(to_nx(co), to_nx(make_path(4)))
    assert complement(make_complete(5)) == empty_graph(5)


def test_degree_sequence_and_regularity():
    assert degree_sequence(make_star(5)) == [4, 1, 1, 1, 1]
    assert is_regular(make_cycle(7))
    assert is_regular(empty_graph(3))
    assert not is_regular(make_path(3))


def test_delete_vertex_relabels_in_order():
    assert delete_vertex(make_star(4), 0) == empty_graph(3)
    assert delete_vertex(make_path(4), 1) == graph_from_edges(3, [(1, 2)])
    assert delete_vertex(make_cycle(5), 4) == make_path(4)


def test_delete_vertex_rejects_bad_vertex():
    with pytest.raises(GraphError):
        delete_vertex(make_path(3), 3)
    with pytest.raises(GraphError):
        delete_vertex(graph_from_edges(1, []), 0)


def test_disjoint_union_and_components():
    g = disjoint_union(make_cycle(3), make_path(2), graph_from_edges(1, []))
    assert g.n == 6
    assert components(g) == [[0, 1, 2], [3, 4], [5]]


def test_disjoint_union_rejects_oversized_result():
    with pytest.raises(GraphError):
        disjoint_union(make_path(40), make_path(40))


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_adjacency_matrix_matches_networkx(random_connected, to_nx):
    for g in random_connected(30, 15):
        expected = nx.to_numpy_array(to_nx(g), nodelist=range(g.n), dtype=np.int64)
        assert np.array_equal(g.adjacency_matrix(), expected)
