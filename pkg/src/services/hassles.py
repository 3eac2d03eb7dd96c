import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import InternalDefect, PreconditionViolation
from src.models.domain import Cluster, Hassle, Tassel
from src.models.graph import CheckResult, Graph, mask_of
from src.services.arrays import build_tassel, check_tassel, strand_from_pattern
from src.services.graph_ops import graph_from_edges, induced_subgraph, path_order
from src.services.probes import check_cluster, check_d_meager
from src.services.rng import SplitMix64

logger = logging.getLogger(__name__)


def check_hassle(H: Hassle, c: int) -> CheckResult:
    """Все свойства c-хассла: обходы, c-растянутость, шея, число обходов"""
    G = H.graph
    if not 0 <= H.neck < G.vertex_count:
        return CheckResult.failed("neck", f"neck {H.neck} outside 0..{G.vertex_count - 1}", vertex=H.neck)
    owner: Dict[int, int] = {}
    for index, walk in enumerate(H.walks):
        field = f"walks[{index}]"
        if not walk:
            return CheckResult.failed(field, "empty walk")
        for v in walk:
            if not 0 <= v < G.vertex_count:
                return CheckResult.failed(field, f"vertex {v} outside 0..{G.vertex_count - 1}", vertex=v)
            if v == H.neck:
                return CheckResult.failed(field, "walk passes through the neck", vertex=v)
            if owner.setdefault(v, index) != index:
                return CheckResult.failed("disjoint", f"vertex {v} lies on walks {owner[v]} and {index}", vertex=v)
        for a, b in zip(walk, walk[1:]):
            if not G.has_edge(a, b):
                return CheckResult.failed(field, f"consecutive images {a} and {b} are not adjacent", vertex=a)
    if mask_of(owner) | (1 << H.neck) != G.full_mask:
        return CheckResult.failed("vertex-set", "hassle graph has vertices outside the neck and the walks")

    for index, walk in enumerate(H.walks):
        field = f"walks[{index}]"
        span = min(c, len(walk))
        for start in range(len(walk) - span + 1):
            window = set(walk[start:start + span])
            if path_order(G, window) is None:
                return CheckResult.failed(
                    "stretched", f"{field} positions {start}..{start + span - 1} do not induce a path",
                    vertex=walk[start],
                )
        own = mask_of(walk)
        if not G.adjacency[H.neck] & own:
            return CheckResult.failed("neck-neighbour", f"neck has no neighbour on walk {index}", vertex=H.neck)
        if c > 0:
            ends = mask_of(walk[:c]) | mask_of(walk[-c:])
            touched = G.adjacency[H.neck] & ends
            if touched:
                v = (touched & -touched).bit_length() - 1
                return CheckResult.failed(
                    "padding", f"neck is adjacent to {v}, among the first or last {c} vertices of walk {index}", vertex=v,
                )
    if len(H.walks) < c:
        return CheckResult.failed("walk-count", f"{len(H.walks)} walks, need at least {c}")
    return CheckResult.passed()


def is_c_hassle(H: Hassle, c: int) -> bool:
    return check_hassle(H, c).ok


def hassle_from_tassel(T: Tassel) -> Hassle:
    """Кисточка как хассл: пути становятся обходами"""
    return Hassle(graph=T.graph, neck=T.neck, walks=T.paths)


def tassel_from_walk(walk: Sequence[int], neck_adjacency: str, c: int, graph: Optional[Graph] = None) -> Tassel:
    """Кисточка T_W: c свежих путей на n_W вершинах, шея смежна с позицией j при бите j = 1"""
    if len(walk) != len(neck_adjacency):
        raise PreconditionViolation("neck_adjacency", f"{len(neck_adjacency)} bits for a walk of length {len(walk)}")
    if set(neck_adjacency) - {"0", "1"}:
        raise PreconditionViolation("neck_adjacency", f"not a binary string: {neck_adjacency!r}")
    if "1" not in neck_adjacency:
        raise PreconditionViolation("neck_adjacency", "neck has no neighbour on the walk")
    if c < 1:
        raise PreconditionViolation("c", f"c must be >= 1, got {c}")
    if "1" in neck_adjacency[:c] + neck_adjacency[-c:]:
        raise PreconditionViolation("padding", f"first and last {c} bits must be zero in {neck_adjacency}")
    if graph is not None:
        for a, b in zip(walk, walk[1:]):
            if not graph.has_edge(a, b):
                raise PreconditionViolation("walk", f"consecutive images {a} and {b} are not adjacent", vertex=a)

    tassel = build_tassel(strand_from_pattern(neck_adjacency), c)
    check = check_tassel(tassel, c)
    if not check:
        raise InternalDefect(f"walk tassel failed its own check: {check.violation}")
    return tassel


def tassel_from_hassle_walk(H: Hassle, index: int, c: int) -> Tassel:
    """T_W для обхода index хассла: биты - смежность шеи с φ_W(j)"""
    walk = H.walks[index]
    bits = "".join("1" if H.graph.has_edge(H.neck, v) else "0" for v in walk)
    return tassel_from_walk(walk, bits, c, H.graph)


def _grow_from_end(G: Graph, path: Sequence[int], apex_mask: int, cap: int) -> int:
    """Длина самого длинного отрезка от начала path, соседи которого в S составляют меньше cap вершин"""
    seen = 0
    for k, v in enumerate(path):
        seen |= G.adjacency[v] & apex_mask
        if seen.bit_count() >= cap:
            return k
    return len(path)


def hassle_from_cluster(G: Graph, S: Sequence[int], L: Sequence[Sequence[int]], c: int, d: int) -> Hassle:
    """Извлечение c-хассла из d-скудного (2cd, 2c²d)-кластера по конструктивному доказательству"""
    if c < 1 or d < 1:
        raise PreconditionViolation("parameters", f"c and d must be positive, got c={c}, d={d}")
    if len(S) != 2 * c * d:
        raise PreconditionViolation("cluster-size", f"|S| = {len(S)}, expected 2cd = {2 * c * d}")
    if len(L) != 2 * c * c * d:
        raise PreconditionViolation("cluster-size", f"{len(L)} paths, expected 2c²d = {2 * c * c * d}")
    check = check_cluster(G, S, L)
    if not check:
        raise PreconditionViolation(check.clause, check.detail, check.vertex)
    check = check_d_meager(G, S, L, d)
    if not check:
        raise PreconditionViolation(check.clause, check.detail, check.vertex)

    apex_mask = mask_of(S)
    cap = c * d
    choice: List[int] = []
    for index, path in enumerate(L):
        front = _grow_from_end(G, path, apex_mask, cap)
        back = _grow_from_end(G, list(reversed(path)), apex_mask, cap)
        if front < c or back < c:
            raise InternalDefect(f"path {index}: end segment has {min(front, back)} vertices, expected at least {c}")
        blocked = 0
        for v in list(path[:c]) + list(path[-c:]):
            blocked |= G.adjacency[v] & apex_mask
        free = apex_mask & ~blocked
        if not free:
            raise InternalDefect(f"path {index}: every vertex of S touches the first or last {c} vertices")
        choice.append((free & -free).bit_length() - 1)

    served: Dict[int, List[int]] = {}
    for index, x in enumerate(choice):
        served.setdefault(x, []).append(index)
    candidates = sorted(x for x, indices in served.items() if len(indices) >= c)
    if not candidates:
        raise InternalDefect(f"no vertex of S serves {c} paths among {len(L)}")
    x = candidates[0]
    chosen = served[x]

    keep = [x] + [v for index in chosen for v in L[index]]
    allowed = apex_mask | mask_of(v for path in L for v in path)
    if mask_of(keep) & ~allowed:
        raise InternalDefect("extracted hassle uses vertices outside the cluster")
    sub, relabel = induced_subgraph(G, keep)
    origin = tuple(sorted(keep))
    hassle = Hassle(
        graph=sub,
        neck=relabel[x],
        walks=tuple(tuple(relabel[v] for v in L[index]) for index in chosen),
        origin=origin,
    )
    check = check_hassle(hassle, c)
    if not check:
        raise InternalDefect(f"extracted structure is not a {c}-hassle: {check.violation}")
    logger.info(f"Extracted a {c}-hassle with neck {x} and {len(chosen)} walks")
    return hassle


def random_meager_cluster(c: int, d: int, seed: int) -> Tuple[Graph, Cluster]:
    """Случайный d-скудный (2cd, 2c²d)-кластер: у каждой вершины пути не больше d-1 соседей в S"""
    if d < 2:
        raise PreconditionViolation("d", "a d-meager cluster needs d >= 2: every apex must reach every path")
    rng = SplitMix64(seed)
    s, l = 2 * c * d, 2 * c * c * d
    edges: List[Tuple[int, int]] = []
    paths: List[Tuple[int, ...]] = []
    attachments: List[Tuple[int, List[int]]] = []
    next_id = 0
    for _ in range(l):
        apexes = list(range(s))
        rng.shuffle(apexes)
        groups: List[List[int]] = []
        while apexes:
            size = rng.randint(1, min(d - 1, len(apexes)))
            groups.append(apexes[:size])
            apexes = apexes[size:]
        layout: List[Optional[List[int]]] = [None] * rng.randint(0, c)
        for group in groups:
            layout.append(group)
            layout.extend([None] * rng.randint(0, 2))
        layout.extend([None] * rng.randint(0, c))
        path = tuple(range(next_id, next_id + len(layout)))
        next_id += len(layout)
        edges.extend(zip(path, path[1:]))
        for v, group in zip(path, layout):
            if group:
                attachments.append((v, group))
        paths.append(path)
    apex_ids = tuple(range(next_id, next_id + s))
    for v, group in attachments:
        edges.extend((v, apex_ids[a]) for a in group)
    graph = graph_from_edges(next_id + s, edges)
    return graph, Cluster(apexes=apex_ids, paths=tuple(paths))
