import logging
from typing import Iterator, List, Optional, Tuple

from src.core.config import settings
from src.core.exceptions import BudgetExceeded, SolverLimitExceeded
from src.models.domain import SearchResult, SearchStatus
from src.models.graph import Embedding, Graph, iter_bits

logger = logging.getLogger(__name__)

CanonicalCode = Tuple[int, Tuple[int, ...]]


class SearchBudget:
    """Счетчик раскрытых узлов перебора, общий для серии поисков"""

    def __init__(self, limit: Optional[int] = None):
        self.limit = settings.search_budget if limit is None else limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} nodes exhausted")

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)


def _pattern_order(H: Graph) -> List[int]:
    """Порядок вершин образца: сначала самые связанные с уже выбранными"""
    degrees = H.degrees()
    order: List[int] = []
    placed = 0
    for _ in range(H.vertex_count):
        best, best_key = -1, None
        for v in H.vertices():
            if placed >> v & 1:
                continue
            key = ((H.adjacency[v] & placed).bit_count(), degrees[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _degree_sequence_fits(H: Graph, G: Graph) -> bool:
    host = sorted(G.degrees(), reverse=True)
    pattern = sorted(H.degrees(), reverse=True)
    return all(p <= h for p, h in zip(pattern, host))


def iter_induced(H: Graph, G: Graph, budget: Optional[SearchBudget] = None) -> Iterator[Embedding]:
    """Все индуцированные вложения H в G в детерминированном порядке (по возрастанию id хозяина)"""
    budget = budget or SearchBudget()
    n_h = H.vertex_count
    if n_h == 0:
        yield Embedding(mapping=())
        return
    if n_h > G.vertex_count or H.edge_count > G.edge_count or not _degree_sequence_fits(H, G):
        return

    order = _pattern_order(H)
    level_of = {v: i for i, v in enumerate(order)}
    constraints = [[(level_of[u], H.has_edge(v, u)) for u in order[:k]] for k, v in enumerate(order)]
    host_degrees = G.degrees()
    by_degree = []
    for d in range(H.max_degree() + 1):
        by_degree.append(sum(1 << h for h in G.vertices() if host_degrees[h] >= d))
    pattern_degrees = [H.degree(v) for v in order]

    image = [0] * n_h
    candidates = [0] * n_h
    used = 0

    def candidates_at(level: int) -> int:
        mask = by_degree[pattern_degrees[level]] & ~used
        for j, adjacent in constraints[level]:
            row = G.adjacency[image[j]]
            mask &= row if adjacent else ~row
            if not mask:
                break
        return mask

    level = 0
    candidates[0] = candidates_at(0)
    while level >= 0:
        pool = candidates[level]
        if not pool:
            level -= 1
            if level >= 0:
                used &= ~(1 << image[level])
            continue
        low = pool & -pool
        candidates[level] = pool ^ low
        budget.spend()
        image[level] = low.bit_length() - 1
        if level == n_h - 1:
            yield Embedding(mapping=tuple(image[level_of[v]] for v in H.vertices()))
            continue
        used |= low
        level += 1
        candidates[level] = candidates_at(level)


def find_induced(H: Graph, G: Graph, limit: Optional[int] = None,
                 budget: Optional[SearchBudget] = None) -> SearchResult:
    """Первое индуцированное вложение H в G; отсутствие точное, только если бюджет не исчерпан"""
    budget = budget or SearchBudget(limit)
    start = budget.used
    try:
        embedding = next(iter_induced(H, G, budget), None)
    except BudgetExceeded:
        logger.debug(f"Induced search {H!r} in {G!r} ran out of budget")
        return SearchResult(status=SearchStatus.BUDGET_EXHAUSTED, nodes=budget.used - start)
    status = SearchStatus.FOUND if embedding is not None else SearchStatus.ABSENT
    return SearchResult(status=status, embedding=embedding, nodes=budget.used - start)


def is_induced_embedding(H: Graph, G: Graph, embedding: Embedding) -> bool:
    """Проверить, что отображение инъективно и сохраняет смежность и несмежность"""
    mapping = embedding.mapping
    if len(mapping) != H.vertex_count or len(set(mapping)) != len(mapping):
        return False
    if any(not 0 <= h < G.vertex_count for h in mapping):
        return False
    for u in H.vertices():
        for v in range(u + 1, H.vertex_count):
            if H.has_edge(u, v) != G.has_edge(mapping[u], mapping[v]):
                return False
    return True


def automorphisms(F: Graph, budget: Optional[SearchBudget] = None) -> List[Tuple[int, ...]]:
    """Все автоморфизмы F (перебор вложений F в себя)"""
    return [e.mapping for e in iter_induced(F, F, budget)]


def _refine(G: Graph, colors: List[int]) -> List[int]:
    """Уточнение раскраски до устойчивой; цвета нормализованы в 0..k-1"""
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(G.adjacency[v]))))
            for v in G.vertices()
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == classes:
            return refined
        classes = len(ranking)
        colors = refined


def _code_of(G: Graph, colors: List[int]) -> Tuple[int, ...]:
    rows = [0] * G.vertex_count
    for v in G.vertices():
        row = 0
        for u in iter_bits(G.adjacency[v]):
            row |= 1 << colors[u]
        rows[colors[v]] = row
    return tuple(rows)


def canonical_code(G: Graph, budget: Optional[int] = None) -> CanonicalCode:
    """Канонический код: минимум по листьям дерева индивидуализации-уточнения"""
    if G.vertex_count > settings.canonical_vertex_limit:
        raise SolverLimitExceeded(
            f"canonical code supports up to {settings.canonical_vertex_limit} vertices, got {G.vertex_count}"
        )
    counter = SearchBudget(settings.canonical_budget if budget is None else budget)
    best: Optional[Tuple[int, ...]] = None

    stack = [_refine(G, G.degrees())]
    while stack:
        colors = stack.pop()
        counter.spend()
        if len(set(colors)) == G.vertex_count:
            code = _code_of(G, colors)
            if best is None or code < best:
                best = code
            continue
        sizes: dict = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, size in sizes.items() if size > 1)
        for v in reversed([v for v in G.vertices() if colors[v] == target]):
            split = [2 * c + 1 for c in colors]
            split[v] = 2 * colors[v]
            stack.append(_refine(G, split))
    return G.vertex_count, best or ()


def are_isomorphic(G1: Graph, G2: Graph) -> bool:
    if G1.vertex_count != G2.vertex_count or G1.edge_count != G2.edge_count:
        return False
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return False
    return canonical_code(G1) == canonical_code(G2)
