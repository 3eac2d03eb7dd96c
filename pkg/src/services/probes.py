import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.config import settings
from src.core.exceptions import PreconditionViolation, UnsupportedQuery, WitnessException
from src.models.domain import BlockCertificate, Cluster, MinorWitness, PathSystem, WebCertificate, WebLink
from src.models.graph import CheckResult, Graph, mask_of
from src.services.flow import disjoint_paths, disjoint_paths_count
from src.services.graph_ops import (
    component_mask,
    graph_from_edges,
    is_graph_path_sequence,
    is_induced_path_sequence,
)

logger = logging.getLogger(__name__)


def _require_ids(G: Graph, field: str, vertices: Sequence[int]) -> None:
    for v in vertices:
        if not 0 <= v < G.vertex_count:
            raise WitnessException(field, f"vertex {v} outside 0..{G.vertex_count - 1}")


# k-блоки

def is_k_block(G: Graph, B: Sequence[int], k: int) -> bool:
    """|B| ≥ k и между любыми двумя вершинами B не меньше k внутренне непересекающихся путей"""
    block = sorted(set(B))
    if len(block) < 2:
        raise PreconditionViolation("block", f"a block needs at least two vertices, got {len(block)}")
    _require_ids(G, "block", block)
    if len(block) < k:
        return False
    return all(disjoint_paths_count(G, x, y) >= k for x, y in combinations(block, 2))


def block_certificate(G: Graph, B: Sequence[int], k: int) -> Optional[BlockCertificate]:
    """Сертификат k-блока из потоковых путей (None, если B не k-блок)"""
    if not is_k_block(G, B, k):
        return None
    block = tuple(sorted(set(B)))
    systems = tuple(
        PathSystem(x=x, y=y, paths=tuple(tuple(p) for p in disjoint_paths(G, x, y)[:k]))
        for x, y in combinations(block, 2)
    )
    return BlockCertificate(block=block, systems=systems)


def verify_block_certificate(G: Graph, cert: BlockCertificate, k: int, d: Optional[int] = None,
                             strong: bool = False) -> CheckResult:
    """Проверка сертификата блока; d - ограничение длины путей, strong - сильный блок"""
    block = list(cert.block)
    if len(set(block)) != len(block):
        raise WitnessException("block", "repeated vertex")
    _require_ids(G, "block", block)
    for system in cert.systems:
        for path in system.paths:
            if not path:
                raise WitnessException(f"systems[{system.x},{system.y}]", "empty path")
            _require_ids(G, f"systems[{system.x},{system.y}]", path)

    if len(block) < k:
        return CheckResult.failed("block-size", f"|B| = {len(block)} < k = {k}")
    interiors: Dict[Tuple[int, int], int] = {}
    supports: Dict[Tuple[int, int], int] = {}
    for x, y in combinations(sorted(block), 2):
        system = cert.system_for(x, y)
        if system is None:
            return CheckResult.failed("pair-missing", f"no path system for pair ({x}, {y})", vertex=x)
        if len(system.paths) < k:
            return CheckResult.failed("path-count", f"pair ({x}, {y}) has {len(system.paths)} paths, need {k}", vertex=x)
        inner = 0
        support = 0
        for path in system.paths:
            if {path[0], path[-1]} != {x, y} or not is_graph_path_sequence(G, path):
                return CheckResult.failed("path", f"{list(path)} is not an {x}-{y} path", vertex=path[0])
            if d is not None and len(path) - 1 > d:
                return CheckResult.failed("short", f"{x}-{y} path of length {len(path) - 1} exceeds d = {d}", vertex=path[1])
            middle = mask_of(path[1:-1])
            if inner & middle:
                v = (inner & middle & -(inner & middle)).bit_length() - 1
                return CheckResult.failed("disjoint", f"two {x}-{y} paths share interior vertex {v}", vertex=v)
            inner |= middle
            support |= mask_of(path)
        interiors[(x, y)] = inner
        supports[(x, y)] = support

    if strong:
        for p in interiors:
            for q in supports:
                if p == q:
                    continue
                clash = interiors[p] & supports[q]
                if clash:
                    v = (clash & -clash).bit_length() - 1
                    return CheckResult.failed(
                        "strong", f"interior of pair {p} meets the paths of pair {q} at vertex {v}", vertex=v,
                    )
    return CheckResult.passed()


# Полипути, кластеры

def check_polypath(G: Graph, W: Sequence[Sequence[int]]) -> CheckResult:
    """Попарно непересекающиеся индуцированные пути"""
    used = 0
    for index, path in enumerate(W):
        _require_ids(G, f"paths[{index}]", path)
        if not is_induced_path_sequence(G, path):
            return CheckResult.failed(f"paths[{index}]", "not an induced path in this order", vertex=path[0] if path else None)
        own = mask_of(path)
        if used & own:
            v = (used & own & -(used & own)).bit_length() - 1
            return CheckResult.failed("disjoint", f"path {index} reuses vertex {v}", vertex=v)
        used |= own
    return CheckResult.passed()


def is_polypath(G: Graph, W: Sequence[Sequence[int]]) -> bool:
    return check_polypath(G, W).ok


def _require_polypath(G: Graph, W: Sequence[Sequence[int]]) -> List[int]:
    check = check_polypath(G, W)
    if not check:
        raise WitnessException(check.clause, check.detail)
    return [mask_of(path) for path in W]


def is_d_loose(G: Graph, W: Sequence[Sequence[int]], d: int) -> bool:
    """Каждая вершина каждого пути имеет соседей меньше чем в d других путях"""
    masks = _require_polypath(G, W)
    for i, path in enumerate(W):
        for v in path:
            touched = sum(1 for j, mask in enumerate(masks) if j != i and G.adjacency[v] & mask)
            if touched >= d:
                return False
    return True


def _touches(G: Graph, own: Sequence[int], other: int) -> bool:
    return any(G.adjacency[v] & other for v in own)


def fancy_subsets(G: Graph, W: Sequence[Sequence[int]], size: int) -> List[Tuple[int, ...]]:
    """Все W' ⊆ W размера size, каждый путь которых не антиполон каждому пути вне W' (индексы путей)"""
    if size > settings.fancy_max_size or len(W) > settings.fancy_max_paths:
        raise UnsupportedQuery(
            f"fancy subsets supported for size <= {settings.fancy_max_size} and at most "
            f"{settings.fancy_max_paths} paths, got size {size} over {len(W)} paths"
        )
    masks = _require_polypath(G, W)
    found = []
    for subset in combinations(range(len(W)), size):
        outside = [j for j in range(len(W)) if j not in subset]
        if all(_touches(G, W[i], masks[j]) for i in subset for j in outside):
            found.append(subset)
    return found


def check_cluster(G: Graph, S: Sequence[int], L: Sequence[Sequence[int]], strict: bool = True) -> CheckResult:
    """(|S|, |L|)-кластер: L - полипуть с попарно антиполными путями, каждая вершина S имеет соседа на каждом пути.

    strict=False проверяет только непересекаемость путей (полипуть без условия антиполноты).
    """
    _require_ids(G, "apexes", S)
    if len(set(S)) != len(S):
        return CheckResult.failed("apexes", "repeated apex")
    apex_mask = mask_of(S)
    path_vertices = mask_of(v for path in L for v in path)
    if apex_mask & path_vertices:
        v = (apex_mask & path_vertices & -(apex_mask & path_vertices)).bit_length() - 1
        return CheckResult.failed("overlap", f"vertex {v} is both an apex and a path vertex", vertex=v)
    check = check_polypath(G, L)
    if not check:
        return check
    masks = [mask_of(path) for path in L]
    if strict:
        for i, j in combinations(range(len(L)), 2):
            if _touches(G, L[i], masks[j]):
                return CheckResult.failed("anticomplete", f"paths {i} and {j} are joined", vertex=L[i][0])
    for x in S:
        for j, mask in enumerate(masks):
            if not G.adjacency[x] & mask:
                return CheckResult.failed("apex-neighbour", f"apex {x} has no neighbour on path {j}", vertex=x)
    return CheckResult.passed()


def is_cluster(G: Graph, S: Sequence[int], L: Sequence[Sequence[int]], strict: bool = True) -> bool:
    check = check_cluster(G, S, L, strict)
    if check.clause == "overlap":
        raise WitnessException("apexes", check.detail)
    return check.ok


def check_d_meager(G: Graph, S: Sequence[int], L: Sequence[Sequence[int]], d: int) -> CheckResult:
    """У каждой вершины каждого пути меньше d соседей в S"""
    apex_mask = mask_of(S)
    for index, path in enumerate(L):
        for v in path:
            count = (G.adjacency[v] & apex_mask).bit_count()
            if count >= d:
                return CheckResult.failed(
                    "meager", f"path {index} vertex {v} has {count} neighbours in S, need fewer than {d}", vertex=v,
                )
    return CheckResult.passed()


def is_d_meager(G: Graph, S: Sequence[int], L: Sequence[Sequence[int]], d: int) -> bool:
    if mask_of(S) & mask_of(v for path in L for v in path):
        raise WitnessException("apexes", "S meets the paths")
    return check_d_meager(G, S, L, d).ok


# Паутины

def verify_web(G: Graph, cert: WebCertificate) -> CheckResult:
    """Условия w-паутины: по индуцированному пути на пару, пересечения путей только в общих концах"""
    web = list(cert.web)
    if len(set(web)) != len(web):
        raise WitnessException("web", "repeated vertex")
    _require_ids(G, "web", web)
    members = set(web)
    pairs = set()
    for link in cert.links:
        if link.x not in members or link.y not in members or link.x == link.y:
            raise WitnessException("links", f"link ({link.x}, {link.y}) is not a pair of web vertices")
        key = (min(link.x, link.y), max(link.x, link.y))
        if key in pairs:
            raise WitnessException("links", f"pair {key} has more than one path")
        pairs.add(key)
        _require_ids(G, f"links[{key}]", link.path)
    expected = set(combinations(sorted(web), 2))
    if pairs != expected:
        missing = sorted(expected - pairs)
        raise WitnessException("links", f"no path for pairs {missing[:3]}")

    for link in cert.links:
        path = link.path
        if not path or {path[0], path[-1]} != {link.x, link.y} or not is_induced_path_sequence(G, path):
            return CheckResult.failed("W2", f"{list(path)} is not an induced path with ends {link.x}, {link.y}", vertex=link.x)
    for a, b in combinations(cert.links, 2):
        shared = set(a.path) & set(b.path)
        allowed = {a.x, a.y} & {b.x, b.y}
        if shared != allowed:
            extra = sorted(shared ^ allowed)
            return CheckResult.failed(
                "W3", f"paths for ({a.x}, {a.y}) and ({b.x}, {b.y}) meet in {sorted(shared)}", vertex=extra[0],
            )
    return CheckResult.passed()


def web_from_block_certificate(cert: BlockCertificate) -> WebCertificate:
    """Самый короткий путь каждой пары блока становится путем паутины"""
    links = []
    for system in cert.systems:
        path = min(system.paths, key=lambda p: (len(p), p))
        links.append(WebLink(x=system.x, y=system.y, path=path))
    return WebCertificate(web=cert.block, links=tuple(links))


# Свидетели миноров

def check_bipartite_minor(G: Graph, witness: MinorWitness) -> CheckResult:
    """Множества ветвления непусты, попарно не пересекаются, связны; каждая пара лево-право соединена ребром"""
    used = 0
    sets = list(witness.left) + list(witness.right)
    for index, branch in enumerate(sets):
        if not branch:
            return CheckResult.failed("branch-set", f"branch set {index} is empty")
        _require_ids(G, f"branch[{index}]", branch)
        own = mask_of(branch)
        if used & own:
            return CheckResult.failed("branch-disjoint", f"branch set {index} overlaps an earlier one", vertex=branch[0])
        used |= own
        if component_mask(G, branch[0], own) != own:
            return CheckResult.failed("branch-connected", f"branch set {index} is not connected", vertex=branch[0])
    for i, left in enumerate(witness.left):
        for j, right in enumerate(witness.right):
            if not _touches(G, left, mask_of(right)):
                return CheckResult.failed("cross-edge", f"left set {i} and right set {j} are not joined", vertex=left[0])
    return CheckResult.passed()


def cluster_minor_witness(cluster: Cluster) -> MinorWitness:
    """Минор K_{s,l}: одиночные вершины S слева, пути справа"""
    return MinorWitness(left=tuple((x,) for x in cluster.apexes), right=tuple(tuple(p) for p in cluster.paths))


def fancy_minor_witness(W: Sequence[Sequence[int]], subset: Sequence[int]) -> MinorWitness:
    """Минор K_{w', w-w'}: пути из W' слева, остальные справа"""
    inside = set(subset)
    return MinorWitness(
        left=tuple(tuple(W[i]) for i in sorted(inside)),
        right=tuple(tuple(W[j]) for j in range(len(W)) if j not in inside),
    )


# Синтетические примеры

def fancy_polypath_example() -> Tuple[Graph, List[Tuple[int, ...]]]:
    """Шесть путей A_0..A_2, B_0..B_2 по три вершины; ребро A_i[j] - B_j[i]: 3-причудливый и 2-свободный полипуть"""
    def a(i: int, j: int) -> int:
        return 3 * i + j

    def b(j: int, i: int) -> int:
        return 9 + 3 * j + i

    edges = []
    for i in range(3):
        edges += [(a(i, 0), a(i, 1)), (a(i, 1), a(i, 2)), (b(i, 0), b(i, 1)), (b(i, 1), b(i, 2))]
        for j in range(3):
            edges.append((a(i, j), b(j, i)))
    paths = [tuple(a(i, j) for j in range(3)) for i in range(3)] + [tuple(b(j, i) for i in range(3)) for j in range(3)]
    return graph_from_edges(18, edges), paths


def cluster_example() -> Tuple[Graph, Cluster]:
    """(3,3)-кластер, 2-скудный: позиция i каждого пути смежна с x_i"""
    edges = []
    paths = []
    for p in range(3):
        path = tuple(range(3 * p, 3 * p + 3))
        edges += list(zip(path, path[1:]))
        edges += [(path[i], 9 + i) for i in range(3)]
        paths.append(path)
    return graph_from_edges(12, edges), Cluster(apexes=(9, 10, 11), paths=tuple(paths))


def strong_block_example() -> Tuple[Graph, BlockCertificate]:
    """Сильный 3-блок: треугольник 0,1,2 и по два частных пути длины 2 на каждую пару"""
    edges = [(0, 1), (1, 2), (0, 2)]
    systems = []
    next_id = 3
    for x, y in ((0, 1), (0, 2), (1, 2)):
        paths = [(x, y)]
        for _ in range(2):
            edges += [(x, next_id), (next_id, y)]
            paths.append((x, next_id, y))
            next_id += 1
        systems.append(PathSystem(x=x, y=y, paths=tuple(paths)))
    return graph_from_edges(next_id, edges), BlockCertificate(block=(0, 1, 2), systems=tuple(systems))
