import logging
from collections import deque
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.exceptions import GraphException
from src.models.graph import Graph, iter_bits, mask_of

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def graph_from_edges(n: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Построить граф по списку ребер (дубликаты схлопываются)"""
    if n < 0:
        raise GraphException(f"negative vertex count {n}")
    rows = [0] * n
    for pair in edges:
        if len(pair) != 2:
            raise GraphException(f"edge {tuple(pair)} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphException(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise GraphException(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(vertex_count=n, adjacency=tuple(rows), labels=tuple(labels) if labels is not None else None)


def empty_graph(n: int) -> Graph:
    return Graph(vertex_count=n, adjacency=(0,) * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphException(f"cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _check_vertices(G: Graph, vertices: Iterable[int]) -> List[int]:
    result = []
    for v in vertices:
        if not 0 <= v < G.vertex_count:
            raise GraphException(f"vertex {v} outside 0..{G.vertex_count - 1}")
        result.append(v)
    return result


def induced_subgraph(G: Graph, X: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Индуцированный подграф G[X] и перенумерация старый id -> новый id"""
    chosen = sorted(set(_check_vertices(G, X)))
    relabel = {v: i for i, v in enumerate(chosen)}
    keep = mask_of(chosen)
    rows = []
    for v in chosen:
        row = 0
        for u in iter_bits(G.adjacency[v] & keep):
            row |= 1 << relabel[u]
        rows.append(row)
    labels = tuple(G.labels[v] for v in chosen) if G.labels is not None else None
    return Graph(vertex_count=len(chosen), adjacency=tuple(rows), labels=labels), relabel


def disjoint_union(*graphs: Graph) -> Graph:
    """Дизъюнктное объединение; вершины идут блоками в порядке аргументов"""
    rows: List[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adjacency)
        offset += g.vertex_count
    return Graph(vertex_count=offset, adjacency=tuple(rows))


def add_vertices(G: Graph, count: int, edges: Iterable[Edge] = ()) -> Graph:
    """Добавить count новых вершин и ребра (в новой нумерации)"""
    n = G.vertex_count + count
    return graph_from_edges(n, list(G.edges()) + list(edges))


def line_graph(F: Graph) -> Graph:
    """Линейный граф: вершина на ребро, смежность по общему концу"""
    edge_list = F.edges()
    incident: Dict[int, List[int]] = {v: [] for v in F.vertices()}
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    rows = [0] * len(edge_list)
    for ids in incident.values():
        group = mask_of(ids)
        for i in ids:
            rows[i] |= group & ~(1 << i)
    return Graph(vertex_count=len(edge_list), adjacency=tuple(rows))


def _normalize_extra(F: Graph, extra: Union[int, Mapping[Edge, int]]) -> Dict[Edge, int]:
    edge_list = F.edges()
    if isinstance(extra, int):
        return {e: extra for e in edge_list}
    result = {}
    for u, v in edge_list:
        if (u, v) in extra:
            count = extra[(u, v)]
        elif (v, u) in extra:
            count = extra[(v, u)]
        else:
            raise GraphException(f"no subdivision count for edge ({u}, {v})")
        if count < 0:
            raise GraphException(f"negative subdivision count {count} for edge ({u}, {v})")
        result[(u, v)] = count
    return result


def subdivide(F: Graph, extra: Union[int, Mapping[Edge, int]]) -> Graph:
    """Заменить каждое ребро uv путем с extra(uv) новыми внутренними вершинами"""
    counts = _normalize_extra(F, extra)
    if all(count == 0 for count in counts.values()):
        return F
    edges: List[Edge] = []
    next_id = F.vertex_count
    for (u, v), count in counts.items():
        chain = [u] + list(range(next_id, next_id + count)) + [v]
        next_id += count
        edges.extend(zip(chain, chain[1:]))
    return graph_from_edges(next_id, edges)


def is_proper_subdivision(extra: Mapping[Edge, int]) -> bool:
    """Собственное подразбиение: каждый путь длины не меньше двух"""
    return all(count >= 1 for count in extra.values())


def suppress_vertices(G: Graph, vertices: Iterable[int]) -> Graph:
    """Подавить вершины степени 2 (склеить два инцидентных ребра), перенумеровав остальные"""
    doomed = set(_check_vertices(G, vertices))
    rows = list(G.adjacency)
    for v in sorted(doomed):
        nbrs = list(iter_bits(rows[v]))
        if len(nbrs) != 2:
            raise GraphException(f"vertex {v} has degree {len(nbrs)}, cannot suppress")
        a, b = nbrs
        if rows[a] >> b & 1:
            raise GraphException(f"suppressing {v} would create a parallel edge {a}-{b}")
        rows[a] = (rows[a] & ~(1 << v)) | (1 << b)
        rows[b] = (rows[b] & ~(1 << v)) | (1 << a)
        rows[v] = 0
    survivors = [v for v in G.vertices() if v not in doomed]
    reduced = Graph(vertex_count=G.vertex_count, adjacency=tuple(rows))
    return induced_subgraph(reduced, survivors)[0]


def components(G: Graph) -> List[List[int]]:
    """Компоненты связности, каждая по возрастанию, упорядочены по минимальной вершине"""
    unseen = G.full_mask
    result = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        reached = 1 << start
        frontier = reached
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adjacency[v]
            frontier = nxt & ~reached
            reached |= frontier
        unseen &= ~reached
        result.append(list(iter_bits(reached)))
    return result


def component_mask(G: Graph, start: int, within: int) -> int:
    """Маска компоненты вершины start в G[within]"""
    reached = 1 << start
    frontier = reached
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adjacency[v]
        frontier = nxt & within & ~reached
        reached |= frontier
    return reached


def is_connected(G: Graph) -> bool:
    return G.vertex_count <= 1 or len(components(G)) == 1


def is_path(G: Graph) -> bool:
    """Граф - путь (K_1 тоже путь)"""
    n = G.vertex_count
    if n == 0:
        return False
    if n == 1:
        return True
    degrees = G.degrees()
    return G.edge_count == n - 1 and max(degrees) <= 2 and is_connected(G)


def path_order(G: Graph, vertices: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """Порядок вершин индуцированного пути G[vertices] от меньшего конца; None, если не путь"""
    chosen = sorted(vertices) if vertices is not None else list(G.vertices())
    if not chosen:
        return None
    keep = mask_of(chosen)
    if len(chosen) == 1:
        return chosen
    degree = {v: (G.adjacency[v] & keep).bit_count() for v in chosen}
    if any(d == 0 or d > 2 for d in degree.values()):
        return None
    ends = [v for v in chosen if degree[v] == 1]
    if len(ends) != 2:
        return None
    order = [ends[0]]
    previous = -1
    current = ends[0]
    while True:
        nxt = [u for u in iter_bits(G.adjacency[current] & keep) if u != previous]
        if not nxt:
            break
        previous, current = current, nxt[0]
        order.append(current)
    return order if len(order) == len(chosen) else None


def is_induced_path_sequence(G: Graph, sequence: Sequence[int]) -> bool:
    """Последовательность - индуцированный путь в G именно в этом порядке"""
    if not sequence or len(set(sequence)) != len(sequence):
        return False
    if any(not 0 <= v < G.vertex_count for v in sequence):
        return False
    position = {v: i for i, v in enumerate(sequence)}
    keep = mask_of(sequence)
    for i, v in enumerate(sequence):
        expected = {position[u] for u in iter_bits(G.adjacency[v] & keep)}
        if expected != {j for j in (i - 1, i + 1) if 0 <= j < len(sequence)}:
            return False
    return True


def is_graph_path_sequence(G: Graph, sequence: Sequence[int]) -> bool:
    """Путь в смысле подграфа: вершины различны, соседние в последовательности смежны"""
    if not sequence or len(set(sequence)) != len(sequence):
        return False
    if any(not 0 <= v < G.vertex_count for v in sequence):
        return False
    return all(G.has_edge(a, b) for a, b in zip(sequence, sequence[1:]))


def is_stable_set(G: Graph, X: Iterable[int]) -> bool:
    chosen = _check_vertices(G, X)
    keep = mask_of(chosen)
    return all(not G.adjacency[v] & keep for v in chosen)


def are_anticomplete(G: Graph, X: Iterable[int], Y: Iterable[int]) -> bool:
    """Нет ребер между X и Y (множества должны быть дизъюнктны)"""
    xs = set(_check_vertices(G, X))
    ys = set(_check_vertices(G, Y))
    overlap = xs & ys
    if overlap:
        raise GraphException(f"sets overlap in {sorted(overlap)}")
    target = mask_of(ys)
    return all(not G.adjacency[v] & target for v in xs)


def is_bipartite(G: Graph) -> bool:
    color: Dict[int, int] = {}
    for start in G.vertices():
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in G.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_clique(G: Graph, X: Iterable[int]) -> bool:
    chosen = list(X)
    keep = mask_of(chosen)
    return all((G.adjacency[v] | (1 << v)) & keep == keep for v in chosen)
