import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, List

from src.core.exceptions import GraphException, SolverLimitExceeded
from src.models.graph import Graph, iter_bits
from src.services.treewidth import elimination_width

logger = logging.getLogger(__name__)

BRUTE_FORCE_TREEWIDTH_LIMIT = 8


def occurs(bits: str, pattern: str) -> bool:
    """pattern или его обращение - подстрока bits"""
    return pattern in bits or pattern[::-1] in bits


def avoids(bits: str, patterns: Iterable[str]) -> bool:
    return not any(occurs(bits, p) for p in patterns)


def padded_strings(c: int, max_length: int) -> Iterator[str]:
    """Все c-дополненные строки длины не больше max_length, по длине, затем лексикографически"""
    for length in range(2 * c + 1, max_length + 1):
        for middle in product("01", repeat=length - 2 * c):
            if "1" in middle:
                yield "0" * c + "".join(middle) + "0" * c


def brute_force_treewidth(G: Graph) -> int:
    """Ширина дерева перебором всех порядков исключения"""
    if G.vertex_count > BRUTE_FORCE_TREEWIDTH_LIMIT:
        raise SolverLimitExceeded(
            f"brute-force treewidth handles at most {BRUTE_FORCE_TREEWIDTH_LIMIT} vertices, got {G.vertex_count}"
        )
    if G.vertex_count == 0:
        return -1
    return min(elimination_width(G, order) for order in permutations(range(G.vertex_count)))


def _simple_paths(G: Graph, x: int, y: int) -> List[int]:
    """Маски внутренних вершин всех простых x–y путей"""
    interiors: List[int] = []
    stack = [(x, 1 << x)]
    while stack:
        v, seen = stack.pop()
        for u in iter_bits(G.adjacency[v] & ~seen):
            if u == y:
                interiors.append(seen & ~(1 << x))
            else:
                stack.append((u, seen | 1 << u))
    return interiors


def brute_force_path_packing(G: Graph, x: int, y: int) -> int:
    """Наибольшее число внутренне непересекающихся x–y путей полным перебором"""
    if x == y:
        raise GraphException(f"path packing needs two distinct vertices, got {x} twice")
    interiors = sorted(set(_simple_paths(G, x, y)))
    direct = 1 if 0 in interiors else 0
    # достаточно минимальных по включению множеств внутренних вершин
    minimal = [p for p in interiors if p and not any(q and q != p and q & p == q for q in interiors)]

    @lru_cache(maxsize=None)
    def best(available: int) -> int:
        fitting = [p for p in minimal if p & ~available == 0]
        if not fitting:
            return 0
        union = 0
        for p in fitting:
            union |= p
        v = (union & -union).bit_length() - 1
        result = best(available & ~(1 << v))
        for p in fitting:
            if p >> v & 1:
                result = max(result, 1 + best(available & ~p))
        return result

    everything = G.full_mask & ~(1 << x) & ~(1 << y)
    return direct + best(everything)
