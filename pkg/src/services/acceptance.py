import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

from src.core.config import settings
from src.core.exceptions import BudgetExceeded
from src.models.domain import CleanStatus, ObstructionKind, SearchStatus, TreeDecomposition
from src.models.graph import Graph
from src.models.report import CriterionResult
from src.services.arrays import array_from_tassel, is_c_tassel, is_n_array, neck_bits, random_array, random_padded_pattern, random_tassel
from src.services.flow import disjoint_paths_count
from src.services.graph_ops import disjoint_union, empty_graph, graph_from_edges, cycle_graph, line_graph, subdivide
from src.services.hassles import hassle_from_cluster, is_c_hassle, random_meager_cluster, tassel_from_walk
from src.services.isomorphism import find_induced
from src.services.language import brute_force_unavoidable, hab_family, tassel_oracle, tasselled_search, unavoidable
from src.services.obstructions import complete, complete_bipartite, t_clean_check, wall
from src.services.oracles import brute_force_path_packing, padded_strings
from src.services.probes import is_k_block
from src.services.rng import SplitMix64
from src.services.treewidth import series_reduction, treewidth_exact, treewidth_lowerbound, verify_decomposition
from src.storage.pace_store import format_td, parse_td

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

NINE_STRINGS = (
    "00011", "0001000", "1010", "010010", "111", "110011", "11011", "110010011", "00010011001000",
)

ARRAY_RANGES = {1: (1, 8), 2: (2, 8), 3: (3, 6), 4: (4, 8)}


def _map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> List[R]:
    """Параллельный map с сохранением порядка; результат совпадает с последовательным"""
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _absent(pattern: Graph, host: Graph) -> bool:
    result = find_induced(pattern, host)
    if result.status == SearchStatus.BUDGET_EXHAUSTED:
        raise BudgetExceeded(f"induced search for {pattern!r} in {host!r} ran out of budget")
    return not result.found


def criterion_treewidth_pins(seed: int, workers: int) -> CriterionResult:
    failures = []
    cases = [(f"K_{t + 1}", complete(t + 1), t) for t in range(1, 6)]
    cases += [(f"K_{t},{t}", complete_bipartite(t, t), t) for t in range(1, 5)]
    for name, G, expected in cases:
        width, _ = treewidth_exact(G)
        if width != expected:
            failures.append(f"{name}: {width} != {expected}")
    return CriterionResult(number=1, title="treewidth of K_{t+1} and K_{t,t}", passed=not failures,
                           detail="; ".join(failures) or "all exact", checked=len(cases))


def criterion_wall_pin(seed: int, workers: int) -> CriterionResult:
    failures = []
    for t in (2, 3):
        width, _ = treewidth_exact(wall(t))
        if width != t:
            failures.append(f"wall({t}): {width}")
    return CriterionResult(number=2, title="treewidth of wall(t), t = 2, 3", passed=not failures,
                           detail="; ".join(failures) or "wall convention confirmed", checked=2)


def array_corpus(n: int, seed: int, count: int = 20) -> List[Graph]:
    return [random_array(n, ARRAY_RANGES[n], seed + 1000 * n + i)[0] for i in range(count)]


def criterion_arrays_treewidth(seed: int, workers: int) -> CriterionResult:
    k4, k33 = complete(4), complete_bipartite(3, 3)
    failures: List[str] = []
    checked = 0

    def inspect(item):
        n, index, G = item
        problems = []
        if not (_absent(k4, G) and _absent(k33, G)):
            problems.append(f"n={n} #{index}: contains K_4 or K_3,3")
        if n <= 3:
            width, _ = treewidth_exact(G)
            if width < n:
                problems.append(f"n={n} #{index}: treewidth {width}")
        elif treewidth_lowerbound(G) < 2:
            problems.append(f"n={n} #{index}: lower bound {treewidth_lowerbound(G)}")
        return problems

    items = [(n, i, G) for n in (1, 2, 3, 4) for i, G in enumerate(array_corpus(n, seed))]
    for problems in _map(inspect, items, workers):
        failures.extend(problems)
        checked += 1
    return CriterionResult(number=3, title="random n-arrays: treewidth >= n, K_4- and K_3,3-free",
                           passed=not failures, detail="; ".join(failures[:5]) or "all instances hold",
                           checked=checked, skipped=["n = 4: exact treewidth beyond the solver limit, lower bound only"])


def criterion_clean_verdicts(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []
    arrays = [G for n in (1, 2) for G in array_corpus(n, seed)]
    for index, verdict in enumerate(_map(lambda G: t_clean_check(G, 3), arrays, workers)):
        if verdict.status != CleanStatus.CLEAN:
            failures.append(f"array #{index}: {verdict.status.value}")
    pendant = graph_from_edges(7, [(a, b) for a in range(3) for b in range(3, 6)] + [(0, 6)])
    planted = [
        ("K_5", complete(5), ObstructionKind.COMPLETE),
        ("K_3,3 + pendant", pendant, ObstructionKind.COMPLETE_BIPARTITE),
        ("wall(3) + K_1", disjoint_union(wall(3), empty_graph(1)), ObstructionKind.WALL_SUBDIVISION),
        ("L(wall(3) subdivided) + K_1", disjoint_union(line_graph(subdivide(wall(3), 1)), empty_graph(1)),
         ObstructionKind.LINE_OF_WALL_SUBDIVISION),
    ]
    for name, G, kind in planted:
        verdict = t_clean_check(G, 3)
        if verdict.status != CleanStatus.OBSTRUCTION or verdict.kind != kind:
            failures.append(f"{name}: {verdict.status.value} {verdict.kind}")
    return CriterionResult(number=4, title="3-clean verdicts on arrays and planted obstructions", passed=not failures,
                           detail="; ".join(failures) or "no false verdicts", checked=len(arrays) + len(planted))


def criterion_tassel_arrays(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []
    skipped: List[str] = []
    for i in range(10):
        d = 3 + i % 3
        # Не больше двух соседей шеи на пути: минор 3-массива укладывается в 3 + 18 вершин
        tassel = random_tassel(3, d, (7, 8) if d == 3 else (7, 9), seed + i)
        G, witness = array_from_tassel(tassel)
        if not is_n_array(G, witness, d):
            failures.append(f"tassel #{i}: array_from_tassel output is not a {d}-array")
        if d == 3:
            minor, _ = series_reduction(G)
            if minor.vertex_count <= settings.treewidth_vertex_limit:
                width, _ = treewidth_exact(minor)
            else:
                width = treewidth_lowerbound(minor)
                skipped.append(f"tassel #{i}: minor on {minor.vertex_count} vertices, lower bound only")
            if width < 3:
                failures.append(f"tassel #{i}: treewidth {width} on a {minor.vertex_count}-vertex minor")
    return CriterionResult(number=5, title="array_from_tassel yields d-arrays", passed=not failures,
                           detail="; ".join(failures) or "all arrays valid", checked=10, skipped=skipped)


def criterion_nine_strings(seed: int, workers: int) -> CriterionResult:
    verdict = unavoidable(NINE_STRINGS, 3)
    failures = [] if verdict.unavoidable else [f"witness {verdict.witness}"]
    skipped = []
    try:
        oracle = brute_force_unavoidable(NINE_STRINGS, 3, max_pattern_length=14)
        if oracle.unavoidable != verdict.unavoidable:
            failures.append("brute force disagrees")
    except BudgetExceeded as e:
        skipped.append(f"brute force: {e}")
    return CriterionResult(number=6, title="nine-string set is 3-unavoidable", passed=not failures,
                           detail="; ".join(failures) or f"unavoidable ({verdict.states} product states)",
                           checked=1, skipped=skipped)


def criterion_hab_tasselled(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []
    for a, b in ((1, 1), (2, 2)):
        family = [strand.graph for strand in hab_family(a, b)]
        search = tasselled_search(family)
        if not search.tasselled or search.c_min > max(a, b):
            failures.append(f"H_{a},{b}: tasselled={search.tasselled}, c_min={search.c_min}")
            continue
        oracle = tassel_oracle(family, search.c_min, strand_len_max=8)
        if not oracle.all_covered:
            failures.append(f"H_{a},{b}: oracle counterexample {oracle.counterexample}")
    return CriterionResult(number=7, title="H_{a,b} families are tasselled", passed=not failures,
                           detail="; ".join(failures) or "H_1,1 and H_2,2 tasselled, oracle agrees", checked=2)


def random_pattern_sets(seed: int, count: int = 300):
    rng = SplitMix64(seed)
    for _ in range(count):
        patterns = []
        for _ in range(rng.randint(1, 3)):
            patterns.append("".join(str(b) for b in rng.bits(rng.randint(1, 4))))
        yield tuple(patterns), rng.randint(1, 3)


def criterion_oracle_equivalence(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []

    def compare(item):
        patterns, c = item
        fast, slow = unavoidable(patterns, c), brute_force_unavoidable(patterns, c)
        if fast.unavoidable != slow.unavoidable or fast.witness != slow.witness:
            return f"{patterns} c={c}: {fast.witness} vs {slow.witness}"
        return None

    items = list(random_pattern_sets(seed))
    failures = [f for f in _map(compare, items, workers) if f]
    return CriterionResult(number=8, title="automaton agrees with brute force", passed=not failures,
                           detail="; ".join(failures[:5]) or "zero disagreements", checked=len(items))


def criterion_run_family(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []
    truncation = tuple("0" + "1" * k + "0" for k in range(1, 5))
    for c in range(1, 6):
        verdict = unavoidable(truncation, c)
        if verdict.unavoidable or "11111" not in verdict.witness:
            failures.append(f"c={c}: {verdict.witness}")
    family = tuple("0" + "1" * k + "0" for k in range(1, 13))
    checked = 0
    for bits in padded_strings(1, 14):
        checked += 1
        if not any(p in bits for p in family):
            failures.append(f"{bits} avoids every 01^k0")
            break
    return CriterionResult(number=9, title="{01^k0} truncations and bounded check", passed=not failures,
                           detail="; ".join(failures) or f"{checked} padded strings covered", checked=checked)


def random_small_graph(rng: SplitMix64, max_vertices: int = 9) -> Graph:
    n = rng.randint(2, max_vertices)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.next_u64() & 1]
    return graph_from_edges(n, edges)


def criterion_menger(seed: int, workers: int) -> CriterionResult:
    rng = SplitMix64(seed)
    cases = []
    for _ in range(100):
        G = random_small_graph(rng)
        x = rng.randint(0, G.vertex_count - 1)
        y = (x + rng.randint(1, G.vertex_count - 1)) % G.vertex_count
        cases.append((G, x, y))
    failures = [
        f"{G!r} ({x}, {y})" for G, x, y in cases
        if disjoint_paths_count(G, x, y) != brute_force_path_packing(G, x, y)
    ]
    if not is_k_block(complete(4), range(4), 3):
        failures.append("K_4 is not a 3-block")
    c5 = cycle_graph(5)
    if not is_k_block(c5, [0, 1, 3], 2) or is_k_block(c5, [0, 1, 3], 3):
        failures.append("C_5 block verdicts")
    return CriterionResult(number=10, title="Menger counts agree with path packing", passed=not failures,
                           detail="; ".join(failures[:5]) or "flow equals brute force", checked=len(cases))


def criterion_hassle_extraction(seed: int, workers: int) -> CriterionResult:
    failures: List[str] = []
    for i in range(20):
        c = 1 + i % 2
        G, cluster = random_meager_cluster(c, 2, seed + i)
        hassle = hassle_from_cluster(G, cluster.apexes, cluster.paths, c, 2)
        if not is_c_hassle(hassle, c):
            failures.append(f"cluster #{i}")
    return CriterionResult(number=11, title="hassle extraction from meager clusters", passed=not failures,
                           detail="; ".join(failures) or "20 hassles extracted", checked=20,
                           skipped=["d = 1: no 1-meager cluster exists, instances use d = 2"])


def criterion_walk_tassels(seed: int, workers: int) -> CriterionResult:
    rng = SplitMix64(seed)
    failures: List[str] = []
    for i in range(50):
        c = rng.randint(1, 3)
        bits = random_padded_pattern(c, rng.randint(2 * c + 1, 2 * c + 8), rng)
        tassel = tassel_from_walk(list(range(len(bits))), bits, c)
        if not is_c_tassel(tassel, c) or any(neck_bits(tassel.graph, tassel.neck, p) != bits for p in tassel.paths):
            failures.append(f"#{i}: {bits} c={c}")
    return CriterionResult(number=12, title="tassel_from_walk reproduces the neck bits", passed=not failures,
                           detail="; ".join(failures[:5]) or "50 tassels valid", checked=50)


def _emptied(td: TreeDecomposition, index: int) -> TreeDecomposition:
    bags = tuple(() if i == index else bag for i, bag in enumerate(td.bags))
    return TreeDecomposition(vertex_count=td.vertex_count, bags=bags, tree_edges=td.tree_edges)


def criterion_decomposition_mutation(seed: int, workers: int) -> CriterionResult:
    rng = SplitMix64(seed)
    failures: List[str] = []
    for i in range(20):
        G = random_small_graph(rng, 10) if i % 4 else wall(2)
        _, td = treewidth_exact(G)
        td = parse_td(format_td(td))
        if not verify_decomposition(G, td):
            failures.append(f"#{i}: emitted decomposition invalid")
            continue
        for index in range(len(td.bags)):
            if verify_decomposition(G, _emptied(td, index)):
                failures.append(f"#{i}: emptying bag {index} keeps the decomposition valid")
                break
    return CriterionResult(number=13, title="decomposition verifier catches every bag mutation", passed=not failures,
                           detail="; ".join(failures[:5]) or "every mutation detected", checked=20)


CRITERIA: Dict[int, Callable[[int, int], CriterionResult]] = {
    1: criterion_treewidth_pins,
    2: criterion_wall_pin,
    3: criterion_arrays_treewidth,
    4: criterion_clean_verdicts,
    5: criterion_tassel_arrays,
    6: criterion_nine_strings,
    7: criterion_hab_tasselled,
    8: criterion_oracle_equivalence,
    9: criterion_run_family,
    10: criterion_menger,
    11: criterion_hassle_extraction,
    12: criterion_walk_tassels,
    13: criterion_decomposition_mutation,
}


def run_suite(seed: int = 0, only: Optional[Iterable[int]] = None, workers: Optional[int] = None) -> List[CriterionResult]:
    """Прогнать критерии приемки по порядку; исключение внутри критерия считается провалом"""
    workers = settings.max_workers if workers is None else workers
    selected = sorted(set(only)) if only else sorted(CRITERIA)
    results = []
    for number in selected:
        started = time.perf_counter()
        logger.info(f"Criterion {number}: {CRITERIA[number].__name__}")
        try:
            result = CRITERIA[number](seed, workers)
        except Exception as e:
            logger.error(f"Criterion {number} raised: {e}", exc_info=True)
            result = CriterionResult(number=number, title=CRITERIA[number].__name__, passed=False, detail=f"error: {e}")
        result.seconds = round(time.perf_counter() - started, 3)
        logger.info(f"Criterion {number}: {'PASS' if result.passed else 'FAIL'} in {result.seconds}s")
        results.append(result)
    return results
