from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional, Tuple
from enum import Enum

from src.models.graph import Embedding, Graph

VertexSeq = Tuple[int, ...]


class ObstructionKind(str, Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    WALL_SUBDIVISION = "wall-subdivision"
    LINE_OF_WALL_SUBDIVISION = "line-of-wall-subdivision"


class SearchStatus(str, Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXHAUSTED = "budget_exhausted"


class CleanStatus(str, Enum):
    CLEAN = "clean"
    OBSTRUCTION = "obstruction"
    INCONCLUSIVE = "inconclusive"


class WallSpec(BaseModel):
    """Параметры стены W_{t×t}"""
    t: int = Field(..., ge=1, description="Порядок стены")


class SearchResult(BaseModel):
    """Результат поиска индуцированного вложения"""
    model_config = ConfigDict(frozen=True)

    status: SearchStatus = Field(..., description="Найдено, отсутствует или бюджет исчерпан")
    embedding: Optional[Embedding] = Field(None, description="Вложение, если найдено")
    nodes: int = Field(0, description="Число раскрытых узлов перебора")

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND


class SubdivisionMatch(BaseModel):
    """Ответ на вопрос «G - подразбиение F?» вместе с отображением ветвящихся вершин"""
    model_config = ConfigDict(frozen=True)

    ok: bool
    branch_map: Optional[VertexSeq] = Field(None, description="branch_map[v] - образ вершины v графа F в G")

    def __bool__(self) -> bool:
        return self.ok


class CleanVerdict(BaseModel):
    """Вердикт проверки t-чистоты"""
    status: CleanStatus
    t: int
    kind: Optional[ObstructionKind] = Field(None, description="Тип найденного препятствия")
    embedding: Optional[Embedding] = Field(None, description="Вложение препятствия в граф")
    pattern: Optional[Graph] = Field(None, description="Вложенный образец препятствия")
    nodes: int = Field(0, description="Израсходованный бюджет")
    patterns_checked: int = Field(0, description="Сколько образцов прошло через поиск")
    skipped_families: List[str] = Field(default_factory=list, description="Семейства, отброшенные точными отсечениями")


class Strand(BaseModel):
    """Пряжа: путь и шея с хотя бы одним соседом на пути"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    neck: int = Field(..., description="Шея")
    path_order: VertexSeq = Field(..., description="Вершины пути по порядку")


class Tassel(BaseModel):
    """Кисточка: копии одной пряжи, склеенные по шее"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    neck: int = Field(..., description="Общая шея")
    paths: Tuple[VertexSeq, ...] = Field(..., description="Пути копий по порядку")


class Hassle(BaseModel):
    """Хассл: шея и попарно непересекающиеся обходы с произвольными ребрами между ними"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    neck: int = Field(..., description="Шея")
    walks: Tuple[VertexSeq, ...] = Field(..., description="Последовательности φ_W обходов")
    origin: Optional[VertexSeq] = Field(None, description="origin[v] - вершина исходного графа, из которой получена v")


class ArrayWitness(BaseModel):
    """Свидетель n-массива: пути L_1..L_n и вершины x_1..x_n"""
    model_config = ConfigDict(frozen=True)

    graph: Graph
    paths: Tuple[VertexSeq, ...] = Field(..., description="Пути L_1..L_n по порядку")
    apexes: VertexSeq = Field(..., description="Вершины x_1..x_n")


class PathSystem(BaseModel):
    """Система путей между парой вершин блока"""
    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    paths: Tuple[VertexSeq, ...]


class BlockCertificate(BaseModel):
    """Сертификат k-блока: множество B и системы путей для пар"""
    model_config = ConfigDict(frozen=True)

    block: VertexSeq = Field(..., description="Множество B")
    systems: Tuple[PathSystem, ...] = Field(..., description="Системы путей по парам из B")

    def system_for(self, x: int, y: int) -> Optional[PathSystem]:
        for system in self.systems:
            if {system.x, system.y} == {x, y}:
                return system
        return None


class Cluster(BaseModel):
    """(s, l)-кластер: вершины S и пути L"""
    model_config = ConfigDict(frozen=True)

    apexes: VertexSeq = Field(..., description="Множество S")
    paths: Tuple[VertexSeq, ...] = Field(..., description="Пути L по порядку")


class WebLink(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    path: VertexSeq


class WebCertificate(BaseModel):
    """Сертификат w-паутины: множество W и по пути Λ на каждую пару"""
    model_config = ConfigDict(frozen=True)

    web: VertexSeq = Field(..., description="Множество W")
    links: Tuple[WebLink, ...] = Field(..., description="Пути Λ_{x,y}")

    def link_for(self, x: int, y: int) -> Optional[WebLink]:
        for link in self.links:
            if {link.x, link.y} == {x, y}:
                return link
        return None


class MinorWitness(BaseModel):
    """Модель минора K_{a,b}: связные попарно непересекающиеся множества ветвления"""
    model_config = ConfigDict(frozen=True)

    left: Tuple[VertexSeq, ...] = Field(..., description="Множества ветвления левой доли")
    right: Tuple[VertexSeq, ...] = Field(..., description="Множества ветвления правой доли")


class TreeDecomposition(BaseModel):
    """Древесная декомпозиция: мешки и ребра дерева между ними"""
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0, description="Число вершин графа")
    bags: Tuple[VertexSeq, ...] = Field(..., description="Мешки, каждый по возрастанию")
    tree_edges: Tuple[Tuple[int, int], ...] = Field(..., description="Ребра дерева по индексам мешков")

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1
