import networkx as nx
import pytest

from domcycle.catalog import ForbiddenCatalog, complete_graph, cycle_graph, path_graph
from helpers import graphs_of_order
from domcycle.graph import (
    Graph,
    articulation_points,
    bits,
    complete_multipartite,
    components,
    has_triangle,
    induced_subgraph,
    is_complete_multipartite,
    is_connected,
    is_independent,
    is_two_connected,
    neighborhood,
    set_neighborhood,
    vset,
)
from oracles import two_connected_edges


def same_edges(g, h):
    return g.n == h.n and sorted(g.edges()) == sorted(h.edges())


class TestGraphInvariants:
    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph(2, (0b01, 0))

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, (0b100, 0))

    def test_order_cap(self):
        Graph.empty(64)
        with pytest.raises(ValueError):
            Graph.empty(65)

    def test_complement_and_edges(self):
        g = cycle_graph(5)
        assert g.num_edges() == 5
        assert g.complement().num_edges() == 5
        assert same_edges(g.complement().complement(), g)

    def test_relabel_is_isomorphic(self):
        g = path_graph(4)
        h = g.relabel([3, 2, 1, 0])
        assert same_edges(g, h)


def test_induced_subgraph_examples(catalog):
    assert same_edges(induced_subgraph(complete_graph(4), 0b0111), complete_graph(3))
    assert same_edges(induced_subgraph(cycle_graph(5), 0b01111), path_graph(4))
    # W*: centre 0, triangle 0-1-2, pendant 5
    paw = induced_subgraph(catalog["W*"], vset([0, 1, 2, 5]))
    assert nx.is_isomorphic(nx.Graph(paw.edges()), nx.Graph(catalog["Z1"].edges()))
    assert induced_subgraph(cycle_graph(5), 0).n == 0


def test_induced_subgraph_order_preserving():
    g = Graph.from_edges(6, [(1, 4), (4, 5), (0, 2)])
    h = induced_subgraph(g, vset([1, 4, 5]))
    assert sorted(h.edges()) == [(0, 1), (1, 2)]


def test_neighborhood_examples(petersen):
    claw = ForbiddenCatalog()["K1_3"]
    assert neighborhood(claw, 0, claw.vertices) == vset([1, 2, 3])
    assert neighborhood(petersen, 0, 0) == 0
    # triangle-free: no neighbour of 0 has a neighbour inside N(0)
    for u in bits(petersen.adj[0]):
        assert neighborhood(petersen, u, petersen.adj[0]) == 0
    assert set_neighborhood(path_graph(5), vset([0, 4]), 0b11111) == vset([1, 3])


def test_components_examples(petersen):
    assert components(path_graph(5), vset([2])) == [vset([0, 1]), vset([3, 4])]
    assert components(complete_graph(5)) == [0b11111]
    nine = vset(range(9))
    # 0-1-2-3-4 outer cycle etc.; removing any 9 vertices leaves one vertex
    assert components(petersen, nine) == [1 << 9]


def test_is_independent_examples():
    assert is_independent(cycle_graph(4), 0)
    assert not is_independent(complete_graph(3), 0b011)
    assert is_independent(cycle_graph(6), vset([0, 2, 4]))


def test_connectivity_examples(catalog):
    assert is_connected(cycle_graph(4)) and is_two_connected(cycle_graph(4))
    assert is_connected(path_graph(4)) and not is_two_connected(path_graph(4))
    bowtie = catalog["W"]
    assert not is_two_connected(bowtie)
    assert articulation_points(bowtie) == 1
    assert not is_two_connected(complete_graph(2))


def test_two_connected_matches_vertex_deletion():
    for n in range(1, 8):
        for g in graphs_of_order(n, "all"):
            assert is_two_connected(g) == two_connected_edges(n, g.edges()), g.edges()


def test_articulation_points_match_networkx():
    for n in range(2, 7):
        for g in graphs_of_order(n, "connected"):
            expected = vset(nx.articulation_points(nx.Graph(g.edges())))
            assert articulation_points(g) == expected


def test_multipartite():
    g = complete_multipartite([2, 2, 2])
    assert g.n == 6 and g.num_edges() == 12
    assert is_complete_multipartite(g) and has_triangle(g)
    assert not is_complete_multipartite(path_graph(4))
    assert is_complete_multipartite(cycle_graph(4))
    assert not has_triangle(cycle_graph(5))


def test_bits_roundtrip():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert vset(bits(0b101001)) == 0b101001
