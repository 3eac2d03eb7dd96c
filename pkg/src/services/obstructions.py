import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import networkx as nx

from src.core.config import settings
from src.core.exceptions import BudgetExceeded, GraphException
from src.models.domain import CleanStatus, CleanVerdict, ObstructionKind, SearchStatus
from src.models.graph import Embedding, Graph
from src.services.graph_ops import (
    components,
    cycle_graph,
    graph_from_edges,
    induced_subgraph,
    is_bipartite,
    is_connected,
    line_graph,
    subdivide,
)
from src.services.isomorphism import SearchBudget, find_induced
from src.services.subdivisions import enumerate_subdivisions, is_subdivision_of

logger = logging.getLogger(__name__)

CLAW = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
TRIANGLE = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])


def complete(n: int) -> Graph:
    """Полный граф K_n"""
    if n < 1:
        raise GraphException(f"complete graph needs n >= 1, got {n}")
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: доля 0..a-1 и доля a..a+b-1"""
    if a < 1 or b < 1:
        raise GraphException(f"complete bipartite graph needs both sides >= 1, got ({a}, {b})")
    return graph_from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


@lru_cache(maxsize=16)
def wall(t: int) -> Graph:
    """Стена W_{t×t}: решетка t×2t, ступеньки в шахматном порядке, затем срезание вершин степени ≤ 1.

    При таком срезании W_{1×1} и W_{2×2} совпадают: обе - один кирпич C_6. Настоящая стена начинается с t = 3.
    """
    if t < 1:
        raise GraphException(f"wall order must be >= 1, got {t}")
    if t == 1:
        # Полоса из одной строки вырождается в путь; одиночный кирпич - это C_6
        return cycle_graph(6)
    width = 2 * t
    alive = {(i, j) for i in range(t) for j in range(width)}
    edges = set()
    for i in range(t):
        for j in range(width - 1):
            edges.add(((i, j), (i, j + 1)))
    for i in range(t - 1):
        for j in range(width):
            if (i + j) % 2 == 0:
                edges.add(((i, j), (i + 1, j)))

    while True:
        degree = {v: 0 for v in alive}
        for a, b in edges:
            degree[a] += 1
            degree[b] += 1
        doomed = {v for v, d in degree.items() if d <= 1}
        if not doomed:
            break
        alive -= doomed
        edges = {(a, b) for a, b in edges if a in alive and b in alive}

    ids = {v: k for k, v in enumerate(sorted(alive))}
    return graph_from_edges(len(ids), [(ids[a], ids[b]) for a, b in sorted(edges)])


def line_graph_roots(G: Graph) -> List[Graph]:
    """Графы H с L(H) ≅ G (связный G не менее чем на 5 вершинах; K_3 дает K_3 и K_{1,3})"""
    if G.vertex_count == 3 and G.edge_count == 3:
        return [complete(3), complete_bipartite(1, 3)]
    if G.vertex_count < 5 or not is_connected(G):
        return []
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(G.vertices())
    nx_graph.add_edges_from(G.edges())
    try:
        root = nx.inverse_line_graph(nx_graph)
    except nx.NetworkXError:
        return []
    root = nx.convert_node_labels_to_integers(root)
    return [graph_from_edges(root.number_of_nodes(), list(root.edges()))]


def is_t_basic(G: Graph, t: int) -> Optional[ObstructionKind]:
    """Классификация G как t-базового препятствия"""
    if t < 1:
        raise GraphException(f"t must be >= 1, got {t}")
    n = G.vertex_count
    if n == t + 1 and G.edge_count == n * (n - 1) // 2:
        return ObstructionKind.COMPLETE
    if n == 2 * t and all(d == t for d in G.degrees()) and is_bipartite(G):
        return ObstructionKind.COMPLETE_BIPARTITE
    frame = wall(t)
    if is_connected(G) and is_subdivision_of(G, frame):
        return ObstructionKind.WALL_SUBDIVISION
    for root in line_graph_roots(G):
        if is_subdivision_of(root, frame):
            return ObstructionKind.LINE_OF_WALL_SUBDIVISION
    return None


def generate_obstruction(kind: ObstructionKind, t: int, extra: int = 0) -> Graph:
    """Построить t-базовое препятствие заданного типа (стены подразбиваются равномерно на extra)"""
    if kind == ObstructionKind.COMPLETE:
        return complete(t + 1)
    if kind == ObstructionKind.COMPLETE_BIPARTITE:
        return complete_bipartite(t, t)
    frame = subdivide(wall(t), extra)
    if kind == ObstructionKind.WALL_SUBDIVISION:
        return frame
    return line_graph(frame)


def _wall_patterns(t: int, largest: int) -> Iterator[Graph]:
    frame = wall(t)
    yield from enumerate_subdivisions(frame, largest, deduplicate=largest <= settings.canonical_vertex_limit)


def _line_patterns(t: int, largest: int) -> Iterator[Graph]:
    frame = wall(t)
    # L(S) имеет |E(S)| = |E(W)| + k вершин при k новых вершинах
    cap = frame.vertex_count + largest - frame.edge_count
    for subdivision in enumerate_subdivisions(frame, cap, deduplicate=cap <= settings.canonical_vertex_limit):
        yield line_graph(subdivision)


def _obstruction(kind: ObstructionKind, t: int, pattern: Graph, embedding: Embedding,
                 budget: SearchBudget, checked: int, skipped: List[str]) -> CleanVerdict:
    logger.info(f"t={t}: found {kind.value} obstruction {pattern!r}")
    return CleanVerdict(status=CleanStatus.OBSTRUCTION, t=t, kind=kind, embedding=embedding, pattern=pattern,
                        nodes=budget.used, patterns_checked=checked, skipped_families=skipped)


def t_clean_check(G: Graph, t: int, budget: Optional[int] = None) -> CleanVerdict:
    """Точная проверка t-чистоты; при исчерпании бюджета - inconclusive"""
    if t < 1:
        raise GraphException(f"t must be >= 1, got {t}")
    counter = SearchBudget(budget)
    skipped: List[str] = []
    checked = 0
    logger.info(f"Checking {G!r} for {t}-basic obstructions (budget {counter.limit})")
    try:
        for kind, pattern in ((ObstructionKind.COMPLETE, complete(t + 1)),
                              (ObstructionKind.COMPLETE_BIPARTITE, complete_bipartite(t, t))):
            checked += 1
            result = find_induced(pattern, G, budget=counter)
            if result.status == SearchStatus.BUDGET_EXHAUSTED:
                raise BudgetExceeded(f"budget exhausted while searching {kind.value}")
            if result.found:
                return _obstruction(kind, t, pattern, result.embedding, counter, checked, skipped)

        parts = components(G)
        for part in parts:
            piece, _ = induced_subgraph(G, part)
            kind = is_t_basic(piece, t)
            if kind in (ObstructionKind.WALL_SUBDIVISION, ObstructionKind.LINE_OF_WALL_SUBDIVISION):
                return _obstruction(kind, t, piece, Embedding(mapping=tuple(part)), counter, checked, skipped)

        largest = max((len(part) for part in parts), default=0)
        frame = wall(t)
        families: List[Tuple[ObstructionKind, int, Graph]] = [
            (ObstructionKind.WALL_SUBDIVISION, frame.vertex_count, CLAW),
            (ObstructionKind.LINE_OF_WALL_SUBDIVISION, frame.edge_count, TRIANGLE),
        ]
        for kind, smallest, marker in families:
            if smallest > largest:
                skipped.append(f"{kind.value}: smallest member has {smallest} vertices, largest component {largest}")
                continue
            if t >= 3:
                result = find_induced(marker, G, budget=counter)
                if result.status == SearchStatus.BUDGET_EXHAUSTED:
                    raise BudgetExceeded(f"budget exhausted while testing {kind.value} shortcut")
                if not result.found:
                    skipped.append(f"{kind.value}: host has no induced {'claw' if marker is CLAW else 'triangle'}")
                    continue
            patterns = _wall_patterns(t, largest) if kind == ObstructionKind.WALL_SUBDIVISION else _line_patterns(t, largest)
            for pattern in patterns:
                checked += 1
                result = find_induced(pattern, G, budget=counter)
                if result.status == SearchStatus.BUDGET_EXHAUSTED:
                    raise BudgetExceeded(f"budget exhausted on {kind.value} pattern {pattern!r}")
                if result.found:
                    return _obstruction(kind, t, pattern, result.embedding, counter, checked, skipped)
    except BudgetExceeded as e:
        logger.warning(f"t-clean check inconclusive: {e}")
        return CleanVerdict(status=CleanStatus.INCONCLUSIVE, t=t, nodes=counter.used,
                            patterns_checked=checked, skipped_families=skipped)

    logger.info(f"{G!r} is {t}-clean ({checked} patterns, {counter.used} nodes)")
    return CleanVerdict(status=CleanStatus.CLEAN, t=t, nodes=counter.used,
                        patterns_checked=checked, skipped_families=skipped)
