import networkx as nx
from hypothesis import strategies as st

from src.models.graph import Graph
from src.services.graph_ops import graph_from_edges


def to_networkx(G: Graph) -> nx.Graph:
    """Тот же граф в networkx (независимый оракул)"""
    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    H.add_edges_from(G.edges())
    return H


@st.composite
def small_graphs(draw, min_vertices: int = 1, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)
