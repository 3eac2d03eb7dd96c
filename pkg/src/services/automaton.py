import logging
from collections import deque
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.core.exceptions import BudgetExceeded

logger = logging.getLogger(__name__)


class PatternAutomaton:
    """Автомат Ахо–Корасик над алфавитом {0, 1}.

    Каждому ключу приписана битовая маска; строка и ее обращение получают один и тот же бит,
    поэтому маска состояния - множество строк, встретившихся «с точностью до обращения».
    Переходы полные: goto[state][bit] определен всегда.
    """

    def __init__(self, patterns: Sequence[str]):
        self.patterns = tuple(patterns)
        self.goto: List[List[int]] = [[-1, -1]]
        self.output: List[int] = [0]
        for index, pattern in enumerate(self.patterns):
            for key in dict.fromkeys((pattern, pattern[::-1])):
                self._insert(key, 1 << index)
        self._build()
        logger.debug(f"Pattern automaton: {len(self.patterns)} patterns, {self.state_count} states")

    @property
    def state_count(self) -> int:
        return len(self.goto)

    def _insert(self, key: str, bit: int) -> None:
        node = 0
        for ch in key:
            b = int(ch)
            if self.goto[node][b] < 0:
                self.goto.append([-1, -1])
                self.output.append(0)
                self.goto[node][b] = len(self.goto) - 1
            node = self.goto[node][b]
        self.output[node] |= bit

    def _build(self) -> None:
        """Ссылки неудачи обходом в ширину; выходы наследуются по ссылке неудачи"""
        fail = [0] * self.state_count
        queue: deque = deque()
        for b in (0, 1):
            child = self.goto[0][b]
            if child < 0:
                self.goto[0][b] = 0
            else:
                fail[child] = 0
                queue.append(child)
        while queue:
            node = queue.popleft()
            self.output[node] |= self.output[fail[node]]
            for b in (0, 1):
                child = self.goto[node][b]
                if child < 0:
                    self.goto[node][b] = self.goto[fail[node]][b]
                else:
                    fail[child] = self.goto[fail[node]][b]
                    queue.append(child)

    def step(self, state: int, bit: int) -> int:
        return self.goto[state][bit]

    def scan(self, bits: str) -> int:
        """Маска всех строк, входящих в bits (или в обращенном виде)"""
        state, seen = 0, 0
        for ch in bits:
            state = self.goto[state][int(ch)]
            seen |= self.output[state]
        return seen


# Фаза дополнения: (была ли единица, длина текущей серии нулей, не больше c)
Phase = Tuple[bool, int]
ProductState = Tuple[int, int, Phase]


def _next_phase(phase: Phase, bit: int, c: int) -> Optional[Phase]:
    seen_one, zeros = phase
    if bit == 0:
        return seen_one, min(zeros + 1, c)
    if not seen_one and zeros < c:
        return None
    return True, 0


def shortest_bad_string(automaton: PatternAutomaton, c: int, covered: Callable[[int], bool],
                        state_limit: Optional[int] = None) -> Tuple[Optional[str], int]:
    """Поиск в ширину по произведению автомата, маски встреченных строк и фазы дополнения.

    Состояния с покрытой маской отбрасываются (маска только растет, покрытие монотонно).
    Плохое состояние: строка c-дополнена, а маска не покрыта. Переход по 0 раскрывается
    раньше перехода по 1, поэтому первый найденный свидетель кратчайший и лексикографически
    наименьший. Возвращает (свидетель или None, число состояний).
    """
    start: ProductState = (0, 0, (False, 0))
    parent: Dict[ProductState, Tuple[Optional[ProductState], int]] = {start: (None, -1)}
    queue = deque([start])
    found: Optional[ProductState] = None
    while queue and found is None:
        state = queue.popleft()
        node, mask, phase = state
        for bit in (0, 1):
            next_phase = _next_phase(phase, bit, c)
            if next_phase is None:
                continue
            next_node = automaton.goto[node][bit]
            next_mask = mask | automaton.output[next_node]
            if covered(next_mask):
                continue
            successor = (next_node, next_mask, next_phase)
            if successor in parent:
                continue
            parent[successor] = (state, bit)
            if state_limit is not None and len(parent) > state_limit:
                raise BudgetExceeded(f"product automaton exceeded {state_limit} states")
            if next_phase[0] and next_phase[1] >= c:
                found = successor
                break
            queue.append(successor)

    if found is None:
        return None, len(parent)
    bits = []
    cursor: Optional[ProductState] = found
    while cursor is not None:
        previous, bit = parent[cursor]
        if bit >= 0:
            bits.append(str(bit))
        cursor = previous
    return "".join(reversed(bits)), len(parent)
