import networkx as nx
import pytest
from hypothesis import given
from pydantic import ValidationError

from helpers import small_graphs, to_networkx
from src.core.exceptions import GraphException
from src.models.graph import Graph
from src.services.graph_ops import (
    are_anticomplete,
    components,
    cycle_graph,
    disjoint_union,
    graph_from_edges,
    induced_subgraph,
    is_bipartite,
    is_clique,
    is_connected,
    is_graph_path_sequence,
    is_induced_path_sequence,
    is_path,
    is_proper_subdivision,
    line_graph,
    path_graph,
    path_order,
    subdivide,
    suppress_vertices,
)


# ============================================================
# Построение графов
# ============================================================


class TestGraphModel:

    def test_edges_are_sorted_pairs(self):
        G = graph_from_edges(4, [(3, 1), (0, 2), (2, 0)])
        assert G.edges() == [(0, 2), (1, 3)]
        assert G.edge_count == 2

    def test_self_loop_rejected(self):
        with pytest.raises(GraphException):
            graph_from_edges(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(GraphException):
            graph_from_edges(3, [(0, 3)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(ValidationError):
            Graph(vertex_count=2, adjacency=(0b10, 0))

    def test_frozen(self, square):
        with pytest.raises(ValidationError):
            square.vertex_count = 5

    def test_cycle_needs_three_vertices(self):
        with pytest.raises(GraphException):
            cycle_graph(2)


# ============================================================
# Подграфы и объединения
# ============================================================


class TestSubgraphs:

    def test_induced_subgraph_relabels(self, square):
        sub, relabel = induced_subgraph(square, [3, 0, 1])
        assert relabel == {0: 0, 1: 1, 3: 2}
        assert sorted(sub.edges()) == [(0, 1), (0, 2)]

    def test_disjoint_union_offsets(self):
        G = disjoint_union(path_graph(2), path_graph(3))
        assert G.vertex_count == 5
        assert G.edges() == [(0, 1), (2, 3), (3, 4)]

    def test_components_ordered_by_minimum(self):
        G = graph_from_edges(6, [(4, 5), (0, 3), (1, 2)])
        assert components(G) == [[0, 3], [1, 2], [4, 5]]

    def test_anticomplete_requires_disjoint_sets(self, square):
        with pytest.raises(GraphException):
            are_anticomplete(square, [0, 1], [1, 2])
        assert are_anticomplete(square, [0], [2])
        assert not are_anticomplete(square, [0], [1])

    @given(small_graphs())
    def test_components_agree_with_networkx(self, G):
        expected = sorted(sorted(c) for c in nx.connected_components(to_networkx(G)))
        assert components(G) == expected
        assert is_connected(G) == nx.is_connected(to_networkx(G))

    @given(small_graphs())
    def test_bipartite_agrees_with_networkx(self, G):
        assert is_bipartite(G) == nx.is_bipartite(to_networkx(G))


# ============================================================
# Пути
# ============================================================


class TestPaths:

    def test_path_recognition(self):
        assert is_path(path_graph(1))
        assert is_path(path_graph(5))
        assert not is_path(cycle_graph(4))
        assert not is_path(graph_from_edges(4, [(0, 1), (2, 3)]))

    def test_path_order_starts_from_smaller_end(self):
        G = graph_from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert path_order(G) == [1, 3, 0, 2]

    def test_path_order_rejects_cycle(self, square):
        assert path_order(square) is None

    def test_induced_path_sequence(self, square):
        assert is_induced_path_sequence(square, [0, 1, 2])
        assert not is_induced_path_sequence(square, [0, 1, 2, 3])
        assert is_graph_path_sequence(square, [0, 1, 2, 3])
        assert not is_graph_path_sequence(square, [0, 2])

    def test_clique(self):
        K4 = graph_from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert is_clique(K4, [0, 1, 2, 3])
        assert not is_clique(path_graph(3), [0, 1, 2])


# ============================================================
# Линейные графы и подразбиения
# ============================================================


class TestLineGraphsAndSubdivisions:

    @given(small_graphs(max_vertices=7))
    def test_line_graph_matches_networkx(self, G):
        ours = to_networkx(line_graph(G))
        theirs = nx.line_graph(to_networkx(G))
        assert nx.is_isomorphic(ours, theirs)

    def test_line_graph_of_star_is_clique(self):
        star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        L = line_graph(star)
        assert L.edge_count == 3 and is_clique(L, [0, 1, 2])

    def test_subdivide_counts(self, square):
        S = subdivide(square, 2)
        assert S.vertex_count == 4 + 4 * 2
        assert S.edge_count == 4 * 3
        assert max(S.degrees()) == 2

    def test_subdivide_zero_returns_same_graph(self, square):
        assert subdivide(square, 0) == square

    def test_subdivide_per_edge(self):
        P = path_graph(3)
        S = subdivide(P, {(1, 0): 1, (1, 2): 0})
        assert S.vertex_count == 4
        assert is_path(S)

    def test_subdivide_missing_edge_count(self):
        with pytest.raises(GraphException):
            subdivide(path_graph(3), {(0, 1): 1})

    def test_proper_subdivision(self):
        assert is_proper_subdivision({(0, 1): 1, (1, 2): 3})
        assert not is_proper_subdivision({(0, 1): 0})

    def test_suppress_inverts_subdivide(self, square):
        S = subdivide(square, 1)
        restored = suppress_vertices(S, range(4, 8))
        assert nx.is_isomorphic(to_networkx(restored), to_networkx(square))

    def test_suppress_rejects_high_degree(self):
        star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(GraphException):
            suppress_vertices(star, [0])
