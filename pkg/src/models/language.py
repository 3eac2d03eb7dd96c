from pydantic import BaseModel, ConfigDict, Field, field_validator
from typing import List, Optional, Tuple

from src.models.domain import Tassel


def reverse(bits: str) -> str:
    return bits[::-1]


def canonical(bits: str) -> str:
    """Представитель «с точностью до обращения»: лексикографический минимум строки и ее обращения"""
    return min(bits, bits[::-1])


def is_padded(bits: str, c: int) -> bool:
    """c-дополненная строка: не меньше c нулей в начале и в конце, есть хотя бы одна единица"""
    return "1" in bits and bits[:c] == "0" * c and bits[len(bits) - c:] == "0" * c


class PatternSet(BaseModel):
    """Конечное множество двоичных строк"""
    model_config = ConfigDict(frozen=True)

    patterns: Tuple[str, ...] = Field(..., description="Строки без повторов, в порядке первого появления")

    @field_validator("patterns", mode="before")
    @classmethod
    def normalise(cls, v):
        seen = []
        for item in v:
            if not isinstance(item, str) or not item:
                raise ValueError("patterns must be non-empty strings")
            if set(item) - {"0", "1"}:
                raise ValueError(f"not a binary string: {item!r}")
            if item not in seen:
                seen.append(item)
        if not seen:
            raise ValueError("pattern set is empty")
        return tuple(seen)

    @property
    def s(self) -> int:
        return max(len(p) for p in self.patterns)

    def closure(self) -> Tuple[str, ...]:
        """Замыкание относительно обращения"""
        out = list(self.patterns)
        for p in self.patterns:
            if p[::-1] not in out:
                out.append(p[::-1])
        return tuple(out)


class PaddedSpec(BaseModel):
    """Параметр дополнения c"""
    model_config = ConfigDict(frozen=True)

    c: int = Field(..., ge=1, description="Сколько нулей в начале и в конце")

    def accepts(self, bits: str) -> bool:
        return is_padded(bits, self.c)


class NeckDecomposition(BaseModel):
    """Компонента K, ее шея v и строки S_{P,v} по компонентам K \\ {v}"""
    model_config = ConfigDict(frozen=True)

    component: Tuple[int, ...] = Field(..., description="Вершины компоненты в исходном графе")
    neck: int = Field(..., description="Шея в нумерации исходного графа")
    strings: Tuple[str, ...] = Field(..., description="Канонические строки, по одной на путь")


class AvoidVerdict(BaseModel):
    """Ответ на вопрос о c-неизбежности"""
    unavoidable: bool
    c: int
    witness: Optional[str] = Field(None, description="Кратчайшая (затем лексикографически меньшая) c-дополненная строка без вхождений")
    states: int = Field(0, description="Сколько состояний или узлов перебора просмотрено")
    method: str = Field("automaton", description="automaton или brute-force")


class MinimalC(BaseModel):
    """Наименьшее c, при котором множество c-неизбежно"""
    c_min: Optional[int] = Field(None, description="None, если такого c нет")
    s: int = Field(..., description="Наибольшая длина строки множества")
    checked: List[AvoidVerdict] = Field(default_factory=list)


class TasselledVerdict(BaseModel):
    """Ответ tasselled_decide при фиксированном c"""
    tasselled: bool
    c: int
    witness: Optional[str] = Field(None, description="c-дополненная строка, не покрытая ни одним графом семейства")
    explanation: List[str] = Field(default_factory=list, description="Почему каждый граф не покрывает свидетеля")
    patterns: Tuple[str, ...] = Field((), description="Строки, которые отслеживает автомат")
    states: int = 0


class TasselledSearch(BaseModel):
    """Ответ tasselled_search: наименьшее c или граница, до которой проверено"""
    tasselled: bool
    c_min: Optional[int] = None
    bound: int = Field(..., description="Наибольшее проверенное c; дальше ответ не меняется")
    verdicts: List[TasselledVerdict] = Field(default_factory=list)


class OracleVerdict(BaseModel):
    """Ответ переборного оракула по кисточкам"""
    all_covered: bool
    c: int
    paths: int = Field(..., description="Сколько путей у проверяемых кисточек")
    strand_len_max: int
    tassels_checked: int = 0
    counterexample: Optional[str] = Field(None, description="Шаблон пряжи непокрытой кисточки")
    tassel: Optional[Tassel] = None
