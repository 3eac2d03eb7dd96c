import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.core.config import settings
from src.core.exceptions import BudgetExceeded, InternalDefect, PreconditionViolation, UnsupportedQuery
from src.models.domain import SearchStatus, Strand
from src.models.graph import Graph
from src.models.language import (
    AvoidVerdict,
    MinimalC,
    NeckDecomposition,
    OracleVerdict,
    PatternSet,
    TasselledSearch,
    TasselledVerdict,
    canonical,
    is_padded,
)
from src.services.arrays import build_tassel, neck_bits, strand_from_pattern
from src.services.automaton import PatternAutomaton, shortest_bad_string
from src.services.graph_ops import components, induced_subgraph, is_connected, is_path, path_order
from src.services.isomorphism import SearchBudget, find_induced
from src.services.oracles import avoids, occurs

logger = logging.getLogger(__name__)

Patterns = Union[PatternSet, Sequence[str]]


def _pattern_set(P: Patterns) -> PatternSet:
    return P if isinstance(P, PatternSet) else PatternSet(patterns=tuple(P))


def _require_c(c: int) -> None:
    if c < 1:
        raise PreconditionViolation("c", f"padding parameter must be >= 1, got {c}")


# Строки пряжей и шеи

def string_of_strand(strand: Strand) -> str:
    """S_{P,v} пряжи в каноническом виде"""
    return canonical(neck_bits(strand.graph, strand.neck, strand.path_order))


def necks_of(K: Graph) -> List[int]:
    """Вершины v, после удаления которых все компоненты - пути"""
    if K.vertex_count == 0 or not is_connected(K):
        raise PreconditionViolation("component", "necks are defined for a connected non-empty graph")
    necks = []
    for v in K.vertices():
        rest, _ = induced_subgraph(K, [u for u in K.vertices() if u != v])
        if all(is_path(induced_subgraph(rest, part)[0]) for part in components(rest)):
            necks.append(v)
    return necks


def strings_of_neck(K: Graph, v: int) -> List[str]:
    """Мультимножество 𝒮_{K,v}: по канонической строке на компоненту K \\ {v}"""
    others = [u for u in K.vertices() if u != v]
    rest, relabel = induced_subgraph(K, others)
    back = {new: old for old, new in relabel.items()}
    strings = []
    for part in components(rest):
        order = path_order(rest, part)
        if order is None:
            raise PreconditionViolation("neck", f"{v} is not a neck: a component of K - v is not a path", vertex=v)
        strings.append(canonical(neck_bits(K, v, [back[u] for u in order])))
    return sorted(strings)


def neck_decompositions(H: Graph) -> List[List[NeckDecomposition]]:
    """Для каждой компоненты H все ее шеи со строками (в нумерации H)"""
    result = []
    for part in components(H):
        K, relabel = induced_subgraph(H, part)
        back = {new: old for old, new in relabel.items()}
        result.append([
            NeckDecomposition(component=tuple(part), neck=back[v], strings=tuple(strings_of_neck(K, v)))
            for v in necks_of(K)
        ])
    return result


# c-неизбежность

def _verify_avoiding_witness(witness: str, patterns: PatternSet, c: int) -> None:
    if not is_padded(witness, c) or not avoids(witness, patterns.patterns):
        raise InternalDefect(f"witness {witness!r} failed the independent substring scan at c={c}")


def unavoidable(P: Patterns, c: int, state_limit: Optional[int] = None) -> AvoidVerdict:
    """Каждая ли c-дополненная строка содержит строку из P или ее обращение (пустота автомата-произведения)"""
    _require_c(c)
    patterns = _pattern_set(P)
    automaton = PatternAutomaton(patterns.patterns)
    witness, states = shortest_bad_string(automaton, c, covered=lambda mask: mask != 0, state_limit=state_limit)
    if witness is not None:
        _verify_avoiding_witness(witness, patterns, c)
    logger.debug(f"unavoidable(c={c}, {len(patterns.patterns)} patterns): witness={witness!r}, {states} states")
    return AvoidVerdict(unavoidable=witness is None, c=c, witness=witness, states=states)


def brute_force_unavoidable(P: Patterns, c: int, max_pattern_length: Optional[int] = None,
                            budget: Optional[int] = None) -> AvoidVerdict:
    """Перебор c-дополненных строк 0^c M 0^c по возрастанию длины M.

    Префикс отбрасывается, если содержит образец, или если окно длины s, начинающееся не раньше
    позиции c, повторяется: вырезав кусок между повторами, получаем более короткую строку без
    образцов. Длина M ограничена (s+2)·2^s.
    """
    _require_c(c)
    patterns = _pattern_set(P)
    s = patterns.s
    max_pattern_length = settings.brute_force_max_pattern_length if max_pattern_length is None else max_pattern_length
    budget = settings.brute_force_budget if budget is None else budget
    if s > max_pattern_length:
        raise BudgetExceeded(f"brute force admits patterns up to length {max_pattern_length}, got {s}")

    keys = set(patterns.closure())
    cap = (s + 2) * 2 ** s
    pad = "0" * c
    start = pad + "1"
    nodes = 1
    if any(k in start for k in keys):
        return AvoidVerdict(unavoidable=True, c=c, states=nodes, method="brute-force")

    frontier = [start]
    middle = 1
    while frontier:
        for prefix in frontier:
            if prefix.endswith("1"):
                completion = prefix + pad
                tail = completion[max(0, len(prefix) - s + 1):]
                if not any(k in tail for k in keys):
                    _verify_avoiding_witness(completion, patterns, c)
                    return AvoidVerdict(unavoidable=False, c=c, witness=completion, states=nodes, method="brute-force")
        if middle >= cap:
            break
        next_frontier = []
        for prefix in frontier:
            for bit in "01":
                child = prefix + bit
                if any(child.endswith(k) for k in keys):
                    continue
                if len(child) - s >= c:
                    window = child[-s:]
                    if child.find(window, c) < len(child) - s:
                        continue
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"brute-force search exceeded {budget} nodes at middle length {middle}")
                next_frontier.append(child)
        frontier = next_frontier
        middle += 1
    return AvoidVerdict(unavoidable=True, c=c, states=nodes, method="brute-force")


def minimal_c(P: Patterns) -> MinimalC:
    """Наименьшее c, при котором P c-неизбежно; проверяется c = s, затем вниз, пока ответ держится"""
    patterns = _pattern_set(P)
    s = patterns.s
    verdict = unavoidable(patterns, s)
    checked = [verdict]
    if not verdict.unavoidable:
        return MinimalC(c_min=None, s=s, checked=checked)
    c_min = s
    for c in range(s - 1, 0, -1):
        verdict = unavoidable(patterns, c)
        checked.append(verdict)
        if not verdict.unavoidable:
            break
        c_min = c
    return MinimalC(c_min=c_min, s=s, checked=checked)


# Кисточность семейств графов

class _Coverage:
    """Маски вариантов шей для каждого графа семейства"""

    def __init__(self, family: Sequence[Graph]):
        if not family:
            raise PreconditionViolation("family", "the graph family is empty")
        self.decompositions: List[List[List[NeckDecomposition]]] = []
        strings: Dict[str, None] = {}
        for index, H in enumerate(family):
            if H.vertex_count == 0:
                raise PreconditionViolation("family", f"graph {index} is empty")
            per_component = neck_decompositions(H)
            self.decompositions.append(per_component)
            for options in per_component:
                for option in options:
                    strings.update(dict.fromkeys(option.strings))
        self.patterns: Tuple[str, ...] = tuple(sorted(strings, key=lambda p: (len(p), p)))
        if len(self.patterns) > settings.mask_width:
            raise UnsupportedQuery(
                f"{len(self.patterns)} distinct neck strings exceed the mask width of {settings.mask_width}"
            )
        index_of = {p: i for i, p in enumerate(self.patterns)}
        self.masks: List[List[List[int]]] = [
            [[sum(1 << index_of[p] for p in set(option.strings)) for option in options] for options in per_component]
            for per_component in self.decompositions
        ]

    @property
    def s(self) -> int:
        return max((len(p) for p in self.patterns), default=0)

    def covered(self, mask: int) -> bool:
        return any(
            all(any(option & ~mask == 0 for option in options) for options in graph)
            for graph in self.masks
        )

    def covered_by_scan(self, bits: str) -> bool:
        return any(
            all(any(all(occurs(bits, p) for p in option.strings) for option in options) for options in graph)
            for graph in self.decompositions
        )

    def explain(self, bits: str) -> List[str]:
        lines = []
        for index, graph in enumerate(self.decompositions):
            for options in graph:
                if not options:
                    lines.append(f"graph {index}: a component has no neck")
                    break
                if not any(all(occurs(bits, p) for p in option.strings) for option in options):
                    part = list(options[0].component)
                    lines.append(f"graph {index}: component {part} has no neck whose strings all occur")
                    break
        return lines


def tasselled_decide(family: Sequence[Graph], c: int, state_limit: Optional[int] = None) -> TasselledVerdict:
    """Для каждой ли c-дополненной строки найдется граф семейства, каждая компонента которого имеет шею
    со всеми строками в ней (или их обращениями)"""
    _require_c(c)
    coverage = _Coverage(family)
    automaton = PatternAutomaton(coverage.patterns)
    witness, states = shortest_bad_string(automaton, c, covered=coverage.covered, state_limit=state_limit)
    if witness is None:
        return TasselledVerdict(tasselled=True, c=c, patterns=coverage.patterns, states=states)
    if not is_padded(witness, c) or coverage.covered_by_scan(witness):
        raise InternalDefect(f"tasselled witness {witness!r} failed the independent substring scan at c={c}")
    return TasselledVerdict(
        tasselled=False, c=c, witness=witness, explanation=coverage.explain(witness),
        patterns=coverage.patterns, states=states,
    )


def tasselled_search(family: Sequence[Graph]) -> TasselledSearch:
    """c = 1, 2, ... до наибольшей длины нужной строки; дальше ответ не меняется"""
    bound = max(1, _Coverage(family).s)
    verdicts = []
    for c in range(1, bound + 1):
        verdict = tasselled_decide(family, c)
        verdicts.append(verdict)
        if verdict.tasselled:
            logger.info(f"Family of {len(family)} graphs is tasselled from c={c}")
            return TasselledSearch(tasselled=True, c_min=c, bound=bound, verdicts=verdicts)
    logger.info(f"Family of {len(family)} graphs is not tasselled (checked up to c={bound})")
    return TasselledSearch(tasselled=False, bound=bound, verdicts=verdicts)


def canonical_padded_patterns(c: int, max_length: int):
    """Канонические c-дополненные шаблоны пряжей длины не больше max_length"""
    for length in range(2 * c + 1, max_length + 1):
        inner = length - 2 * c
        for bits in product("01", repeat=inner):
            middle = "".join(bits)
            if middle[0] != "1" or middle[-1] != "1":
                continue
            pattern = "0" * c + middle + "0" * c
            if canonical(pattern) == pattern:
                yield pattern


def neck_width(family: Sequence[Graph]) -> int:
    """Наибольшее число строк у одной шеи по всем компонентам семейства"""
    return max(
        (len(option.strings) for H in family for options in neck_decompositions(H) for option in options),
        default=1,
    )


def tassel_oracle(family: Sequence[Graph], c: int, strand_len_max: Optional[int] = None,
                  budget: Optional[int] = None, paths: Optional[int] = None) -> OracleVerdict:
    """Перебор c-кисточек по каноническим шаблонам; покрыта ли каждая индуцированными компонентами графа.

    У кисточки max(c, neck_width) путей: каждая компонента K - v занимает свой путь.
    """
    _require_c(c)
    strand_len_max = settings.strand_len_max if strand_len_max is None else strand_len_max
    paths = max(c, neck_width(family)) if paths is None else paths
    if paths < c:
        raise PreconditionViolation("paths", f"a {c}-tassel has at least {c} paths, got {paths}")
    parts = [[induced_subgraph(H, part)[0] for part in components(H)] for H in family]
    search = SearchBudget(budget)
    checked = 0
    for pattern in canonical_padded_patterns(c, strand_len_max):
        tassel = build_tassel(strand_from_pattern(pattern), paths)
        checked += 1
        covered = False
        for graph_parts in parts:
            contained = True
            for K in graph_parts:
                result = find_induced(K, tassel.graph, budget=search)
                if result.status == SearchStatus.BUDGET_EXHAUSTED:
                    raise BudgetExceeded(f"tassel oracle ran out of search budget at pattern {pattern}")
                if not result.found:
                    contained = False
                    break
            if contained:
                covered = True
                break
        if not covered:
            logger.info(f"Tassel oracle: pattern {pattern} is not covered at c={c}")
            return OracleVerdict(
                all_covered=False, c=c, paths=paths, strand_len_max=strand_len_max, tassels_checked=checked,
                counterexample=pattern, tassel=tassel,
            )
    return OracleVerdict(all_covered=True, c=c, paths=paths, strand_len_max=strand_len_max, tassels_checked=checked)


def hab_family(a: int, b: int) -> List[Strand]:
    """Семейство H_{a,b}: шея не смежна с v_1..v_a, смежна с v_{a+1}, дальше b произвольных битов"""
    if a < 0 or b < 0:
        raise PreconditionViolation("parameters", f"a and b must be non-negative, got a={a}, b={b}")
    return [strand_from_pattern("0" * a + "1" + "".join(beta)) for beta in product("01", repeat=b)]
