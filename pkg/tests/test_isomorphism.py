import networkx as nx
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from helpers import small_graphs, to_networkx
from src.models.domain import SearchStatus
from src.services.graph_ops import cycle_graph, graph_from_edges, path_graph
from src.services.isomorphism import (
    SearchBudget,
    are_isomorphic,
    automorphisms,
    canonical_code,
    find_induced,
    is_induced_embedding,
    iter_induced,
)
from src.services.obstructions import complete, complete_bipartite


class TestFindInduced:

    def test_no_induced_p4_in_clique(self):
        result = find_induced(path_graph(4), complete(4))
        assert result.status == SearchStatus.ABSENT
        assert result.embedding is None

    def test_c4_in_k33(self):
        result = find_induced(cycle_graph(4), complete_bipartite(3, 3))
        assert result.found
        assert is_induced_embedding(cycle_graph(4), complete_bipartite(3, 3), result.embedding)

    def test_triangle_not_in_bipartite(self):
        assert find_induced(complete(3), complete_bipartite(3, 3)).status == SearchStatus.ABSENT

    def test_empty_pattern_always_embeds(self):
        assert find_induced(graph_from_edges(0, []), path_graph(3)).found

    def test_budget_exhaustion_is_not_absence(self):
        host = cycle_graph(12)
        result = find_induced(path_graph(11), host, limit=3)
        assert result.status == SearchStatus.BUDGET_EXHAUSTED

    def test_shared_budget_accumulates(self):
        budget = SearchBudget(10_000)
        find_induced(path_graph(3), cycle_graph(6), budget=budget)
        first = budget.used
        find_induced(path_graph(3), cycle_graph(6), budget=budget)
        assert budget.used == 2 * first

    def test_embeddings_are_deterministic(self):
        G = cycle_graph(5)
        first = [e.mapping for e in iter_induced(path_graph(3), G)]
        second = [e.mapping for e in iter_induced(path_graph(3), G)]
        assert first == second
        assert len(first) == 10

    @given(small_graphs(max_vertices=4), small_graphs(max_vertices=7))
    def test_agrees_with_networkx(self, H, G):
        expected = GraphMatcher(to_networkx(G), to_networkx(H)).subgraph_is_isomorphic()
        result = find_induced(H, G)
        assert result.found == expected
        if result.found:
            assert is_induced_embedding(H, G, result.embedding)


class TestCanonicalCode:

    def test_automorphisms_of_cycle(self):
        assert len(automorphisms(cycle_graph(5))) == 10

    def test_relabelled_graphs_share_code(self):
        G = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        H = graph_from_edges(5, [(4, 3), (3, 2), (2, 1), (1, 0), (0, 4), (4, 2)])
        assert canonical_code(G) == canonical_code(H)
        assert are_isomorphic(G, H)

    def test_regular_non_isomorphic(self):
        two_triangles = graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not are_isomorphic(two_triangles, cycle_graph(6))

    @given(small_graphs(max_vertices=7), st.randoms(use_true_random=False))
    def test_code_invariant_under_permutation(self, G, random):
        order = list(G.vertices())
        random.shuffle(order)
        H = graph_from_edges(G.vertex_count, [(order[u], order[v]) for u, v in G.edges()])
        assert canonical_code(G) == canonical_code(H)

    @given(small_graphs(max_vertices=6), small_graphs(max_vertices=6))
    def test_isomorphism_agrees_with_networkx(self, G, H):
        assert are_isomorphic(G, H) == nx.is_isomorphic(to_networkx(G), to_networkx(H))
