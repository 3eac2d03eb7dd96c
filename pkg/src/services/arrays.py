import logging
from typing import List, Sequence, Tuple

from src.core.exceptions import PreconditionViolation
from src.models.domain import ArrayWitness, Strand, Tassel
from src.models.graph import CheckResult, Graph, mask_of
from src.services.graph_ops import graph_from_edges, is_induced_path_sequence
from src.services.rng import SplitMix64

logger = logging.getLogger(__name__)


def neck_bits(G: Graph, neck: int, path: Sequence[int]) -> str:
    """Строка смежности шеи с вершинами пути по порядку"""
    return "".join("1" if G.has_edge(neck, p) else "0" for p in path)


def _check_ids(G: Graph, field: str, vertices: Sequence[int]) -> CheckResult:
    for v in vertices:
        if not 0 <= v < G.vertex_count:
            return CheckResult.failed(field, f"vertex {v} outside 0..{G.vertex_count - 1}", vertex=v)
    return CheckResult.passed()


def check_strand(strand: Strand, c: int = 0) -> CheckResult:
    """Проверка пряжи; при c > 0 - ещё и условия c-пряжи"""
    G, neck, path = strand.graph, strand.neck, list(strand.path_order)
    for result in (_check_ids(G, "neck", [neck]), _check_ids(G, "path_order", path)):
        if not result:
            return result
    if neck in path:
        return CheckResult.failed("neck", "neck lies on the path", vertex=neck)
    if mask_of(path) | (1 << neck) != G.full_mask or len(set(path)) + 1 != G.vertex_count:
        return CheckResult.failed("vertex-set", "strand graph must consist of the neck and the path")
    if not is_induced_path_sequence(G, path):
        return CheckResult.failed("path_order", "path vertices do not induce a path in this order")
    bits = neck_bits(G, neck, path)
    if "1" not in bits:
        return CheckResult.failed("neck-neighbour", "neck has no neighbour on the path", vertex=neck)
    if c > 0 and "1" in bits[:c] + bits[-c:]:
        return CheckResult.failed("padding", f"neck is adjacent to one of the first or last {c} path vertices", vertex=neck)
    return CheckResult.passed()


def is_c_strand(strand: Strand, c: int) -> bool:
    return check_strand(strand, c).ok


def strand_from_pattern(pattern: str) -> Strand:
    """Путь на |pattern| вершинах 0..L-1 и шея L, смежная с позицией i при pattern[i] = 1"""
    if not pattern or set(pattern) - {"0", "1"}:
        raise PreconditionViolation("pattern", f"not a binary string: {pattern!r}")
    if "1" not in pattern:
        raise PreconditionViolation("pattern", f"all-zero pattern {pattern!r} gives no neck neighbour")
    length = len(pattern)
    edges = [(i, i + 1) for i in range(length - 1)]
    edges += [(length, i) for i, bit in enumerate(pattern) if bit == "1"]
    return Strand(graph=graph_from_edges(length + 1, edges), neck=length, path_order=tuple(range(length)))


def build_tassel(strand: Strand, count: int) -> Tassel:
    """count копий пряжи, склеенных по шее: шея 0, путь копии i - вершины 1+i·L .. (i+1)·L"""
    if count < 1:
        raise PreconditionViolation("count", f"tassel needs at least one copy, got {count}")
    check = check_strand(strand)
    if not check:
        raise PreconditionViolation(check.clause, check.detail, check.vertex)
    bits = neck_bits(strand.graph, strand.neck, strand.path_order)
    length = len(bits)
    edges: List[Tuple[int, int]] = []
    paths = []
    for i in range(count):
        path = tuple(range(1 + i * length, 1 + (i + 1) * length))
        edges.extend(zip(path, path[1:]))
        edges.extend((0, p) for p, bit in zip(path, bits) if bit == "1")
        paths.append(path)
    return Tassel(graph=graph_from_edges(1 + count * length, edges), neck=0, paths=tuple(paths))


def check_tassel(T: Tassel, c: int) -> CheckResult:
    """Все свойства c-кисточки; первое нарушение с именем условия"""
    G = T.graph
    result = _check_ids(G, "neck", [T.neck])
    if not result:
        return result
    if not T.paths:
        return CheckResult.failed("paths", "tassel has no paths")
    used = 1 << T.neck
    for index, path in enumerate(T.paths):
        result = _check_ids(G, f"paths[{index}]", path)
        if not result:
            return result
        if not path:
            return CheckResult.failed(f"paths[{index}]", "empty path")
        for v in path:
            if used >> v & 1:
                return CheckResult.failed(f"paths[{index}]", f"vertex {v} is reused", vertex=v)
            used |= 1 << v
        if not is_induced_path_sequence(G, path):
            return CheckResult.failed(f"paths[{index}]", "vertices do not induce a path in this order")
    if used != G.full_mask:
        return CheckResult.failed("vertex-set", "tassel graph has vertices outside the neck and the paths")
    masks = [mask_of(path) for path in T.paths]
    for i, path in enumerate(T.paths):
        for v in path:
            foreign = G.adjacency[v] & ~masks[i] & ~(1 << T.neck)
            if foreign:
                return CheckResult.failed("anticomplete", f"path {i} vertex {v} has a neighbour on another path", vertex=v)

    reference = neck_bits(G, T.neck, T.paths[0])
    for index, path in enumerate(T.paths):
        bits = neck_bits(G, T.neck, path)
        if bits not in (reference, reference[::-1]):
            return CheckResult.failed("copies", f"path {index} carries {bits}, path 0 carries {reference}")
    if "1" not in reference:
        return CheckResult.failed("neck-neighbour", "neck has no neighbour on the paths", vertex=T.neck)
    if len(T.paths) < c:
        return CheckResult.failed("path-count", f"{len(T.paths)} paths, need at least {c}")
    if c > 0 and "1" in reference[:c] + reference[-c:]:
        return CheckResult.failed("padding", f"neck is adjacent to one of the first or last {c} path vertices", vertex=T.neck)
    return CheckResult.passed()


def is_c_tassel(T: Tassel, c: int) -> bool:
    return check_tassel(T, c).ok


def tassel_strand(T: Tassel) -> Strand:
    """Пряжа первой копии кисточки"""
    bits = neck_bits(T.graph, T.neck, T.paths[0])
    return strand_from_pattern(bits)


def array_from_tassel(T: Tassel) -> Tuple[Graph, ArrayWitness]:
    """d копий кисточки; u^i_j - первая вершина пути j копии i, v^i_j - последняя; ребра u^i_j v^{i+1}_j"""
    check = check_tassel(T, 1)
    if not check:
        raise PreconditionViolation(check.clause, f"input is not a 1-tassel: {check.detail}", check.vertex)
    d = len(T.paths)
    size = T.graph.vertex_count
    edges: List[Tuple[int, int]] = []
    for i in range(d):
        edges.extend((u + i * size, v + i * size) for u, v in T.graph.edges())
    copies = [[tuple(p + i * size for p in path) for path in T.paths] for i in range(d)]
    for i in range(d - 1):
        for j in range(d):
            edges.append((copies[i][j][0], copies[i + 1][j][-1]))
    apexes = tuple(T.neck + i * size for i in range(d))
    paths = tuple(
        tuple(v for i in range(d) for v in reversed(copies[i][j]))
        for j in range(d)
    )
    graph = graph_from_edges(d * size, edges)
    logger.debug(f"Built {d}-array on {graph.vertex_count} vertices from a tassel with {d} paths")
    return graph, ArrayWitness(graph=graph, paths=paths, apexes=apexes)


def check_array(G: Graph, w: ArrayWitness, n: int) -> CheckResult:
    """Буквальная проверка определения n-массива по свидетелю"""
    if len(w.paths) != n:
        return CheckResult.failed("paths", f"{len(w.paths)} paths, expected {n}")
    if len(w.apexes) != n:
        return CheckResult.failed("apexes", f"{len(w.apexes)} apexes, expected {n}")
    result = _check_ids(G, "apexes", w.apexes)
    if not result:
        return result
    used = 0
    for index, path in enumerate(w.paths):
        result = _check_ids(G, f"paths[{index}]", path)
        if not result:
            return result
        if not path:
            return CheckResult.failed(f"paths[{index}]", "empty path")
        for v in path:
            if used >> v & 1:
                return CheckResult.failed(f"paths[{index}]", f"vertex {v} is reused", vertex=v)
            used |= 1 << v
        if not is_induced_path_sequence(G, path):
            return CheckResult.failed(f"paths[{index}]", "vertices do not induce a path in this order")
    for x in w.apexes:
        if used >> x & 1:
            return CheckResult.failed("apexes", f"apex {x} repeats or lies on a path", vertex=x)
        used |= 1 << x
    if used != G.full_mask:
        return CheckResult.failed("vertex-set", "graph has vertices outside the witness")

    masks = [mask_of(path) for path in w.paths]
    for i in range(n):
        for j in range(i + 1, n):
            for v in w.paths[i]:
                if G.adjacency[v] & masks[j]:
                    return CheckResult.failed("anticomplete", f"paths {i} and {j} are joined at vertex {v}", vertex=v)
    apex_mask = mask_of(w.apexes)
    for x in w.apexes:
        if G.adjacency[x] & apex_mask:
            return CheckResult.failed("apex-stable", f"apex {x} is adjacent to another apex", vertex=x)
    for i, x in enumerate(w.apexes):
        for j, mask in enumerate(masks):
            if not G.adjacency[x] & mask:
                return CheckResult.failed("apex-neighbour", f"apex {i} has no neighbour on path {j}", vertex=x)
    for j, path in enumerate(w.paths):
        for i in range(n - 1):
            current = [k for k, v in enumerate(path) if G.has_edge(w.apexes[i], v)]
            following = [k for k, v in enumerate(path) if G.has_edge(w.apexes[i + 1], v)]
            if max(current) >= min(following):
                return CheckResult.failed(
                    "order", f"on path {j} a neighbour of apex {i + 1} precedes a neighbour of apex {i}",
                    vertex=path[min(following)],
                )
    return CheckResult.passed()


def is_n_array(G: Graph, w: ArrayWitness, n: int) -> bool:
    return check_array(G, w, n).ok


def random_array(n: int, path_len_range: Tuple[int, int], seed: int) -> Tuple[Graph, ArrayWitness]:
    """Случайный n-массив: пути длины из диапазона, n непересекающихся интервалов соседства слева направо"""
    lo, hi = path_len_range
    if n < 1:
        raise PreconditionViolation("n", f"array order must be >= 1, got {n}")
    if lo > hi:
        raise PreconditionViolation("path_len_range", f"empty range [{lo}, {hi}]")
    if lo < n:
        raise PreconditionViolation("path_len_range", f"paths need at least {n} vertices for {n} disjoint intervals, got {lo}")
    rng = SplitMix64(seed)
    edges: List[Tuple[int, int]] = []
    paths = []
    intervals: List[List[Tuple[int, int]]] = []
    next_id = 0
    for _ in range(n):
        length = rng.randint(lo, hi)
        path = tuple(range(next_id, next_id + length))
        next_id += length
        edges.extend(zip(path, path[1:]))
        spans = [rng.randint(1, length // n) for _ in range(n)]
        gaps = rng.composition(length - sum(spans), n + 1)
        position = gaps[0]
        placed = []
        for span, gap in zip(spans, gaps[1:]):
            placed.append((position, position + span))
            position += span + gap
        paths.append(path)
        intervals.append(placed)
    apexes = tuple(range(next_id, next_id + n))
    for path, placed in zip(paths, intervals):
        for x, (start, stop) in zip(apexes, placed):
            edges.extend((x, path[k]) for k in range(start, stop))
    graph = graph_from_edges(next_id + n, edges)
    return graph, ArrayWitness(graph=graph, paths=tuple(paths), apexes=apexes)


def random_padded_pattern(c: int, length: int, rng: SplitMix64) -> str:
    """Случайная c-дополненная строка: c нулей с каждого края, в середине хотя бы одна 1"""
    if length < 2 * c + 1:
        raise PreconditionViolation("length", f"a {c}-padded string needs at least {2 * c + 1} symbols, got {length}")
    middle = [str(b) for b in rng.bits(length - 2 * c)]
    if "1" not in middle:
        middle[rng.randint(0, len(middle) - 1)] = "1"
    return "0" * c + "".join(middle) + "0" * c


def random_tassel(c: int, d: int, length_range: Tuple[int, int], seed: int) -> Tassel:
    """Случайная c-кисточка с d путями; длина пути из length_range"""
    if d < c:
        raise PreconditionViolation("d", f"a {c}-tassel needs at least {c} paths, got {d}")
    rng = SplitMix64(seed)
    lo, hi = length_range
    length = rng.randint(max(lo, 2 * c + 1), max(hi, 2 * c + 1))
    return build_tassel(strand_from_pattern(random_padded_pattern(c, length, rng)), d)
