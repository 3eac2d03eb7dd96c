import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.config import settings
from src.core.exceptions import SolverLimitExceeded
from src.models.domain import TreeDecomposition
from src.models.graph import CheckResult, Graph, iter_bits, mask_of
from src.services.graph_ops import graph_from_edges

logger = logging.getLogger(__name__)

Adjacency = Dict[int, int]


def _working_copy(G: Graph) -> Adjacency:
    return {v: G.adjacency[v] for v in G.vertices()}


def _eliminate(adj: Adjacency, v: int) -> None:
    """Исключить v: соседи становятся кликой"""
    nbrs = adj.pop(v)
    for u in iter_bits(nbrs):
        adj[u] = (adj[u] | nbrs) & ~(1 << u) & ~(1 << v)


def _is_clique(adj: Adjacency, vertices: int) -> bool:
    return all((adj[u] | (1 << u)) & vertices == vertices for u in iter_bits(vertices))


def degeneracy(G: Graph) -> int:
    adj = _working_copy(G)
    best = 0
    while adj:
        v = min(adj, key=lambda u: (adj[u].bit_count(), u))
        best = max(best, adj[v].bit_count())
        nbrs = adj.pop(v)
        for u in iter_bits(nbrs):
            adj[u] &= ~(1 << v)
    return best


def minor_min_width(G: Graph) -> int:
    """Нижняя оценка minor-min-width: стягиваем вершину минимальной степени с соседом, у которого меньше всего общих соседей"""
    adj = _working_copy(G)
    best = 0
    while adj:
        v = min(adj, key=lambda u: (adj[u].bit_count(), u))
        best = max(best, adj[v].bit_count())
        nbrs = adj[v]
        if not nbrs:
            del adj[v]
            continue
        u = min(iter_bits(nbrs), key=lambda w: ((adj[w] & nbrs).bit_count(), w))
        # стягивание ребра vu в вершину u
        del adj[v]
        merged = (adj[u] | nbrs) & ~(1 << u) & ~(1 << v)
        adj[u] = merged
        for w in iter_bits(nbrs):
            if w != u:
                adj[w] = (adj[w] & ~(1 << v)) | (1 << u)
    return best


def treewidth_lowerbound(G: Graph) -> int:
    """max(вырожденность, minor-min-width); не превосходит точной ширины"""
    if G.vertex_count == 0:
        return -1
    return max(degeneracy(G), minor_min_width(G))


def series_reduction(G: Graph) -> Tuple[Graph, List[int]]:
    """Минор G: вершины степени ≤ 1 удаляются, вершины степени 2 подавляются (при смежных соседях удаляются).

    Ширина минора не больше ширины G и равна ей, если ширина G не меньше 3.
    Возвращает минор и исходные id его вершин.
    """
    adj = _working_copy(G)
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nbrs = adj[v]
            if nbrs.bit_count() > 2:
                continue
            if nbrs.bit_count() == 2:
                a, b = iter_bits(nbrs)
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            for u in iter_bits(nbrs):
                adj[u] &= ~(1 << v)
            del adj[v]
            changed = True
            break
    survivors = sorted(adj)
    index = {v: i for i, v in enumerate(survivors)}
    edges = [(index[u], index[w]) for u in survivors for w in iter_bits(adj[u]) if u < w]
    logger.debug(f"Series reduction: {G.vertex_count} -> {len(survivors)} vertices")
    return graph_from_edges(len(survivors), edges), survivors


def min_fill_ordering(adj: Adjacency) -> Tuple[int, List[int]]:
    """Жадный порядок min-fill: верхняя оценка ширины"""
    work = dict(adj)
    width = -1
    order: List[int] = []

    def fill(v: int) -> int:
        nbrs = work[v]
        missing = sum((nbrs & ~work[u] & ~(1 << u)).bit_count() for u in iter_bits(nbrs))
        return missing // 2

    while work:
        v = min(work, key=lambda u: (fill(u), u))
        width = max(width, work[v].bit_count())
        _eliminate(work, v)
        order.append(v)
    return width, order


def _safe_reductions(adj: Adjacency, low: int) -> Tuple[List[int], int]:
    """Симплициальные и почти симплициальные (при степени ≤ low) вершины исключаются без потери точности"""
    prefix: List[int] = []
    changed = True
    while changed and adj:
        changed = False
        for v in sorted(adj):
            nbrs = adj[v]
            degree = nbrs.bit_count()
            simplicial = _is_clique(adj, nbrs)
            almost = degree <= low and any(_is_clique(adj, nbrs & ~(1 << u)) for u in iter_bits(nbrs))
            if not (simplicial or almost):
                continue
            if simplicial:
                low = max(low, degree)
            _eliminate(adj, v)
            prefix.append(v)
            changed = True
            break
    return prefix, low


def _q_size(adj: Adjacency, eliminated: int, v: int) -> int:
    """|Q(S, v)|: вершины вне S ∪ {v}, достижимые из v через S"""
    within = eliminated | (1 << v)
    reach = 0
    for u in iter_bits(_component_in(adj, v, within)):
        reach |= adj[u]
    return (reach & ~within).bit_count()


def _component_in(adj: Adjacency, start: int, within: int) -> int:
    reached = 1 << start
    frontier = reached
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & within & ~reached
        reached |= frontier
    return reached


def _ordering_within(adj: Adjacency, vertices: Sequence[int], width: int) -> Optional[List[int]]:
    """Порядок исключения вершин компоненты с шириной ≤ width или None (ДП по подмножествам)"""
    k = len(vertices)
    if k <= width + 1:
        return list(vertices)
    universe = mask_of(vertices)
    parents: Dict[int, Tuple[int, int]] = {0: (0, -1)}
    layer = [0]
    # Когда осталось не больше width+1 вершин, годится любой порядок
    for _ in range(k - width - 1):
        nxt: Dict[int, Tuple[int, int]] = {}
        for S in layer:
            for v in iter_bits(universe & ~S):
                T = S | (1 << v)
                if T in nxt:
                    continue
                if _q_size(adj, S, v) <= width:
                    nxt[T] = (S, v)
        if not nxt:
            return None
        parents.update(nxt)
        layer = sorted(nxt)
    final = layer[0]
    order: List[int] = []
    S = final
    while S:
        prev, v = parents[S]
        order.append(v)
        S = prev
    order.reverse()
    order.extend(iter_bits(universe & ~final))
    return order


def _exact_ordering(adj: Adjacency, low: int) -> Tuple[int, List[int]]:
    upper, greedy = min_fill_ordering(adj)
    if upper <= low:
        return upper, greedy
    for width in range(max(low, 0), upper):
        order = _ordering_within(adj, sorted(adj), width)
        if order is not None:
            return width, order
    return upper, greedy


def elimination_width(G: Graph, order: Sequence[int]) -> int:
    adj = _working_copy(G)
    width = -1
    for v in order:
        width = max(width, adj[v].bit_count())
        _eliminate(adj, v)
    return width


def decomposition_from_ordering(G: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Мешок {v} ∪ N+(v) на каждую вершину; родитель - мешок раньше всех исключаемого соседа из N+(v)"""
    position = {v: i for i, v in enumerate(order)}
    adj = _working_copy(G)
    bags: List[int] = []
    parent: List[int] = []
    for v in order:
        higher = adj[v]
        bags.append(higher | (1 << v))
        parent.append(min((position[u] for u in iter_bits(higher)), default=-1))
        _eliminate(adj, v)
    roots = [i for i, p in enumerate(parent) if p < 0]
    edges = [(i, p) for i, p in enumerate(parent) if p >= 0]
    edges.extend(zip(roots, roots[1:]))
    return _compress(G, bags, edges)


def _compress(G: Graph, bags: List[int], edges: List[Tuple[int, int]]) -> TreeDecomposition:
    """Стянуть мешки, вложенные в соседа, затем удалить мешки, без которых декомпозиция остается верной"""
    alive = {i: bag for i, bag in enumerate(bags)}
    nbrs: Dict[int, set] = {i: set() for i in alive}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)

    def absorb(i: int, j: int) -> None:
        for k in nbrs.pop(i):
            nbrs[k].discard(i)
            if k != j:
                nbrs[k].add(j)
                nbrs[j].add(k)
        del alive[i]

    changed = True
    while changed:
        changed = False
        for i in sorted(alive):
            j = next((j for j in sorted(nbrs[i]) if alive[i] & ~alive[j] == 0), None)
            if j is not None:
                absorb(i, j)
                changed = True
                break

    changed = True
    while changed and len(alive) > 1:
        changed = False
        for i in sorted(alive):
            mutated = _freeze(G, {k: (0 if k == i else bag) for k, bag in alive.items()}, nbrs)
            if verify_decomposition(G, mutated):
                others = sorted(nbrs[i])
                hub = others[0]
                for k in nbrs.pop(i):
                    nbrs[k].discard(i)
                for k in others[1:]:
                    nbrs[k].add(hub)
                    nbrs[hub].add(k)
                del alive[i]
                changed = True
                break
    return _freeze(G, alive, nbrs)


def _freeze(G: Graph, alive: Dict[int, int], nbrs: Dict[int, set]) -> TreeDecomposition:
    index = {i: k for k, i in enumerate(sorted(alive))}
    bags = tuple(tuple(iter_bits(alive[i])) for i in sorted(alive))
    edges = sorted({(min(index[a], index[b]), max(index[a], index[b])) for a in alive for b in nbrs[a] if b in index})
    return TreeDecomposition(vertex_count=G.vertex_count, bags=bags, tree_edges=tuple(edges))


def treewidth_exact(G: Graph, vertex_limit: Optional[int] = None) -> Tuple[int, TreeDecomposition]:
    """Точная ширина дерева с декомпозицией (редукции, затем ДП по подмножествам для каждой компоненты)"""
    limit = settings.treewidth_vertex_limit if vertex_limit is None else vertex_limit
    if G.vertex_count > limit:
        raise SolverLimitExceeded(
            f"exact treewidth supports up to {limit} vertices, got {G.vertex_count}; use the lower bound mode"
        )
    if G.vertex_count == 0:
        return -1, TreeDecomposition(vertex_count=0, bags=(), tree_edges=())

    low = treewidth_lowerbound(G)
    adj = _working_copy(G)
    order, low = _safe_reductions(adj, low)
    width = max((elimination_width(G, order) if order else -1), -1)

    pending = mask_of(adj)
    while pending:
        start = (pending & -pending).bit_length() - 1
        part = _component_in(adj, start, pending)
        pending &= ~part
        sub = {v: adj[v] & part for v in iter_bits(part)}
        part_width, part_order = _exact_ordering(sub, low)
        width = max(width, part_width)
        order.extend(part_order)

    achieved = elimination_width(G, order)
    if achieved != width:
        logger.error(f"Ordering width {achieved} disagrees with computed width {width}")
        width = achieved
    decomposition = decomposition_from_ordering(G, order)
    logger.debug(f"treewidth({G!r}) = {width} with {len(decomposition.bags)} bags")
    return width, decomposition


def verify_decomposition(G: Graph, td: TreeDecomposition) -> CheckResult:
    """Проверка четырех свойств древесной декомпозиции независимо от решателя"""
    bags = td.bags
    count = len(bags)
    if td.vertex_count != G.vertex_count:
        return CheckResult.failed("vertex-count", f"decomposition is for {td.vertex_count} vertices, graph has {G.vertex_count}")
    for i, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < G.vertex_count:
                return CheckResult.failed("bag-range", f"bag {i} holds unknown vertex {v}", vertex=v)

    # дерево
    if count == 0:
        if G.vertex_count:
            return CheckResult.failed("vertex-coverage", "no bags for a non-empty graph", vertex=0)
        return CheckResult.passed()
    if len(td.tree_edges) != count - 1:
        return CheckResult.failed("tree", f"{len(td.tree_edges)} tree edges for {count} bags")
    links: Dict[int, List[int]] = {i: [] for i in range(count)}
    for a, b in td.tree_edges:
        if not (0 <= a < count and 0 <= b < count) or a == b:
            return CheckResult.failed("tree", f"bad tree edge ({a}, {b})")
        links[a].append(b)
        links[b].append(a)
    reached = {0}
    stack = [0]
    while stack:
        for b in links[stack.pop()]:
            if b not in reached:
                reached.add(b)
                stack.append(b)
    if len(reached) != count:
        return CheckResult.failed("tree", "tree edges do not connect all bags")

    holders: Dict[int, List[int]] = {v: [] for v in G.vertices()}
    for i, bag in enumerate(bags):
        for v in bag:
            holders[v].append(i)
    for v in G.vertices():
        if not holders[v]:
            return CheckResult.failed("vertex-coverage", f"vertex {v} is in no bag", vertex=v)

    bag_masks = [mask_of(bag) for bag in bags]
    for u, v in G.edges():
        pair = (1 << u) | (1 << v)
        if not any(mask & pair == pair for mask in bag_masks):
            return CheckResult.failed("edge-coverage", f"edge ({u}, {v}) is in no bag", vertex=u)

    for v in G.vertices():
        own = set(holders[v])
        seen = {holders[v][0]}
        stack = [holders[v][0]]
        while stack:
            for b in links[stack.pop()]:
                if b in own and b not in seen:
                    seen.add(b)
                    stack.append(b)
        if seen != own:
            return CheckResult.failed("connectivity", f"bags holding vertex {v} are not connected", vertex=v)
    return CheckResult.passed()
