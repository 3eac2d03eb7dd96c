import networkx as nx
import pytest

from helpers import to_networkx
from src.services.graph_ops import cycle_graph, graph_from_edges, path_graph, subdivide
from src.services.isomorphism import is_induced_embedding
from src.models.graph import Embedding
from src.services.obstructions import complete, complete_bipartite, wall
from src.services.subdivisions import (
    distribution_orbits,
    enumerate_subdivisions,
    is_subdivision_of,
    topological_reduction,
)


def _partitions(total: int, parts: int, largest=None) -> int:
    """Число разбиений total не более чем на parts слагаемых"""
    largest = total if largest is None else largest
    if total == 0:
        return 1
    if parts == 0:
        return 0
    return sum(_partitions(total - first, parts - 1, first) for first in range(1, min(total, largest) + 1))


class TestTopologicalReduction:

    def test_subdivided_clique(self):
        reduction = topological_reduction(subdivide(complete(4), 1))
        assert reduction.branch == (0, 1, 2, 3)
        assert len(reduction.chains) == 6
        assert all(chain.length == 2 for chain in reduction.chains)
        assert reduction.cycles == ()

    def test_cycle_has_no_branch_vertices(self):
        reduction = topological_reduction(cycle_graph(5))
        assert reduction.branch == ()
        assert len(reduction.cycles) == 1
        assert reduction.cycles[0].length == 5

    def test_path_is_one_chain(self):
        reduction = topological_reduction(path_graph(5))
        assert reduction.branch == (0, 4)
        assert [chain.interior for chain in reduction.chains] == [(1, 2, 3)]


class TestIsSubdivisionOf:

    def test_uneven_subdivision_of_clique(self):
        K4 = complete(4)
        extra = {(0, 1): 2, (0, 2): 0, (0, 3): 1, (1, 2): 0, (1, 3): 3, (2, 3): 0}
        G = subdivide(K4, extra)
        match = is_subdivision_of(G, K4)
        assert match
        branch = match.branch_map
        assert len(set(branch)) == 4
        assert all(G.degree(v) == 3 for v in branch)

    def test_relabelled_subdivided_wall(self):
        S = subdivide(wall(3), 1)
        order = list(reversed(range(S.vertex_count)))
        relabelled = graph_from_edges(S.vertex_count, [(order[u], order[v]) for u, v in S.edges()])
        assert is_subdivision_of(relabelled, wall(3))

    def test_branch_map_is_embedding_for_trivial_subdivision(self):
        W = wall(3)
        match = is_subdivision_of(W, W)
        assert match
        assert is_induced_embedding(W, W, Embedding(mapping=match.branch_map))

    def test_negative_cases(self):
        assert not is_subdivision_of(cycle_graph(4), complete(4))
        assert not is_subdivision_of(complete(4), complete_bipartite(2, 2))
        assert not is_subdivision_of(cycle_graph(4), cycle_graph(5))

    def test_cycle_subdivides_triangle(self):
        assert is_subdivision_of(cycle_graph(7), complete(3))


class TestEnumeration:

    @pytest.mark.parametrize("total", [0, 1, 2, 3, 4, 5, 6])
    def test_triangle_orbits_are_partitions(self, total):
        assert len(distribution_orbits(complete(3), total)) == _partitions(total, 3)

    @pytest.mark.parametrize("total", [0, 1, 2, 3, 4])
    def test_star_orbits_are_partitions(self, total):
        assert len(distribution_orbits(complete_bipartite(1, 4), total)) == _partitions(total, 4)

    def test_cycles_from_triangle(self):
        graphs = list(enumerate_subdivisions(complete(3), 6))
        assert [g.vertex_count for g in graphs] == [3, 4, 5, 6]

    def test_clique_subdivisions_are_distinct(self):
        graphs = list(enumerate_subdivisions(complete(4), 6))
        assert len(graphs) == 5
        nx_graphs = [to_networkx(g) for g in graphs]
        for i, a in enumerate(nx_graphs):
            for b in nx_graphs[i + 1:]:
                assert not nx.is_isomorphic(a, b)

    def test_sizes_are_non_decreasing(self):
        sizes = [g.vertex_count for g in enumerate_subdivisions(complete_bipartite(2, 3), 8)]
        assert sizes == sorted(sizes)
        assert all(is_subdivision_of(g, complete_bipartite(2, 3)) for g in enumerate_subdivisions(complete_bipartite(2, 3), 8))
