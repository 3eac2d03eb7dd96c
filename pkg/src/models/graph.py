from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Iterable, Iterator, List, Optional, Tuple


def iter_bits(mask: int) -> Iterator[int]:
    """Номера установленных битов по возрастанию"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Битовая маска множества вершин"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph(BaseModel):
    """Неизменяемый простой неориентированный граф на вершинах 0..n-1"""
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0, description="Число вершин")
    adjacency: Tuple[int, ...] = Field(..., description="Битовые маски соседей по вершинам")
    labels: Optional[Tuple[str, ...]] = Field(None, description="Необязательные метки вершин")

    @model_validator(mode="after")
    def _check_adjacency(self) -> "Graph":
        n = self.vertex_count
        if len(self.adjacency) != n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for {n} vertices")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError(f"labels has {len(self.labels)} entries for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full or row < 0:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return self

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> List[Tuple[int, int]]:
        """Ребра (u, v), u < v, в лексикографическом порядке"""
        return [(u, v) for u in range(self.vertex_count) for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


class Embedding(BaseModel):
    """Инъекция вершин образца в вершины хозяина"""
    model_config = ConfigDict(frozen=True)

    mapping: Tuple[int, ...] = Field(..., description="mapping[i] - образ вершины i образца")

    def image(self) -> List[int]:
        return sorted(self.mapping)


class CheckResult(BaseModel):
    """Результат проверки: выполнено ли свойство и первое нарушение"""
    model_config = ConfigDict(frozen=True)

    ok: bool
    clause: Optional[str] = Field(None, description="Имя нарушенного условия")
    detail: Optional[str] = Field(None, description="Подробности нарушения")
    vertex: Optional[int] = Field(None, description="Вершина, на которой найдено нарушение")

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(ok=True)

    @classmethod
    def failed(cls, clause: str, detail: str, vertex: Optional[int] = None) -> "CheckResult":
        return cls(ok=False, clause=clause, detail=detail, vertex=vertex)

    @property
    def violation(self) -> Optional[str]:
        if self.ok:
            return None
        return f"{self.clause}: {self.detail}"
