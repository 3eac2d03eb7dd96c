import pytest

from src.core.exceptions import GraphException, SolverLimitExceeded
from src.services.graph_ops import cycle_graph, empty_graph, path_graph
from src.services.obstructions import complete, complete_bipartite
from src.services.oracles import (
    avoids,
    brute_force_path_packing,
    brute_force_treewidth,
    occurs,
    padded_strings,
)


class TestStrings:

    def test_occurs_either_direction(self):
        assert occurs("00110", "011")
        assert occurs("00110", "110")
        assert occurs("0100", "001")
        assert not occurs("0100", "11")

    def test_avoids(self):
        assert avoids("010", ["11", "000"])
        assert not avoids("0110", ["11", "000"])

    def test_padded_strings_order(self):
        assert list(padded_strings(1, 4)) == ["010", "0010", "0100", "0110"]

    def test_padded_strings_count(self):
        assert sum(1 for _ in padded_strings(2, 7)) == 1 + 3 + 7


class TestTreewidthOracle:

    @pytest.mark.parametrize("G,expected", [
        (empty_graph(0), -1),
        (empty_graph(3), 0),
        (path_graph(5), 1),
        (cycle_graph(6), 2),
        (complete(5), 4),
        (complete_bipartite(3, 3), 3),
    ])
    def test_known_values(self, G, expected):
        assert brute_force_treewidth(G) == expected

    def test_size_limit(self):
        with pytest.raises(SolverLimitExceeded):
            brute_force_treewidth(path_graph(9))


class TestPathPackingOracle:

    def test_direct_edge_counts(self):
        assert brute_force_path_packing(complete(4), 0, 1) == 3

    def test_biclique(self):
        assert brute_force_path_packing(complete_bipartite(3, 4), 0, 1) == 4

    def test_disconnected(self):
        assert brute_force_path_packing(empty_graph(3), 0, 2) == 0

    def test_same_vertex_rejected(self):
        with pytest.raises(GraphException):
            brute_force_path_packing(path_graph(3), 1, 1)
