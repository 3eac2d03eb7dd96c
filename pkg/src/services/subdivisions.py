import logging
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.core.config import settings
from src.models.domain import SubdivisionMatch
from src.models.graph import Graph, mask_of
from src.services.graph_ops import subdivide
from src.services.isomorphism import SearchBudget, automorphisms, canonical_code

logger = logging.getLogger(__name__)


class Chain(BaseModel):
    """Цепь между ветвящимися вершинами через вершины степени 2"""
    model_config = ConfigDict(frozen=True)

    start: int
    end: int
    interior: Tuple[int, ...] = Field(..., description="Внутренние вершины от start к end")

    @property
    def length(self) -> int:
        return len(self.interior) + 1

    def vertices(self) -> List[int]:
        return [self.start, *self.interior, self.end]

    def edge_set(self) -> FrozenSet[FrozenSet[int]]:
        walk = self.vertices()
        return frozenset(frozenset(pair) for pair in zip(walk, walk[1:]))


class CycleComponent(BaseModel):
    """Компонента-цикл (все вершины степени 2)"""
    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...] = Field(..., description="Вершины цикла по порядку обхода")

    @property
    def length(self) -> int:
        return len(self.order)

    def edge_set(self) -> FrozenSet[FrozenSet[int]]:
        walk = list(self.order) + [self.order[0]]
        return frozenset(frozenset(pair) for pair in zip(walk, walk[1:]))


class TopologicalReduction(BaseModel):
    """Ветвящиеся вершины (степень ≠ 2), цепи между ними и компоненты-циклы"""
    model_config = ConfigDict(frozen=True)

    branch: Tuple[int, ...]
    chains: Tuple[Chain, ...]
    cycles: Tuple[CycleComponent, ...]


def topological_reduction(G: Graph) -> TopologicalReduction:
    degrees = G.degrees()
    branch = [v for v in G.vertices() if degrees[v] != 2]
    branch_mask = mask_of(branch)
    seen_edges = set()
    on_chain = 0
    chains: List[Chain] = []
    for a in branch:
        for first in G.neighbors(a):
            if frozenset((a, first)) in seen_edges:
                continue
            seen_edges.add(frozenset((a, first)))
            walk = [a]
            previous, current = a, first
            while not branch_mask >> current & 1:
                walk.append(current)
                on_chain |= 1 << current
                nxt = next(w for w in G.neighbors(current) if w != previous)
                seen_edges.add(frozenset((current, nxt)))
                previous, current = current, nxt
            walk.append(current)
            if walk[-1] < walk[0]:
                walk.reverse()
            chains.append(Chain(start=walk[0], end=walk[-1], interior=tuple(walk[1:-1])))

    cycles: List[CycleComponent] = []
    remaining = G.full_mask & ~branch_mask & ~on_chain
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        order = [start]
        previous, current = start, min(G.neighbors(start))
        while current != start:
            order.append(current)
            previous, current = current, next(w for w in G.neighbors(current) if w != previous)
        remaining &= ~mask_of(order)
        cycles.append(CycleComponent(order=tuple(order)))
    return TopologicalReduction(branch=tuple(branch), chains=tuple(chains), cycles=tuple(cycles))


def _chains_by_pair(reduction: TopologicalReduction) -> Dict[Tuple[int, int], List[Chain]]:
    table: Dict[Tuple[int, int], List[Chain]] = {}
    for chain in reduction.chains:
        table.setdefault((chain.start, chain.end), []).append(chain)
    for chains in table.values():
        chains.sort(key=lambda c: (c.length, c.interior))
    return table


def _pair(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _lengths_dominate(host: Sequence[Chain], pattern: Sequence[Chain]) -> bool:
    if len(host) != len(pattern):
        return False
    return all(h.length >= p.length for h, p in zip(host, pattern))


def is_subdivision_of(G: Graph, F: Graph) -> SubdivisionMatch:
    """G изоморфен подразбиению F: биекция ветвящихся вершин и цепей не короче исходных"""
    if G.vertex_count < F.vertex_count or G.edge_count - G.vertex_count != F.edge_count - F.vertex_count:
        return SubdivisionMatch(ok=False)
    red_g, red_f = topological_reduction(G), topological_reduction(F)
    if len(red_g.branch) != len(red_f.branch) or len(red_g.chains) != len(red_f.chains):
        return SubdivisionMatch(ok=False)
    if len(red_g.cycles) != len(red_f.cycles):
        return SubdivisionMatch(ok=False)
    cycles_g = sorted(red_g.cycles, key=lambda c: c.length, reverse=True)
    cycles_f = sorted(red_f.cycles, key=lambda c: c.length, reverse=True)
    if any(g.length < f.length for g, f in zip(cycles_g, cycles_f)):
        return SubdivisionMatch(ok=False)

    table_g, table_f = _chains_by_pair(red_g), _chains_by_pair(red_f)
    deg_g, deg_f = G.degrees(), F.degrees()
    order = sorted(red_f.branch, key=lambda v: (-deg_f[v], v))
    assignment: Dict[int, int] = {}
    used = set()

    def consistent(f: int, g: int) -> bool:
        for f2, g2 in list(assignment.items()) + [(f, g)]:
            if not _lengths_dominate(table_g.get(_pair(g, g2), []), table_f.get(_pair(f, f2), [])):
                return False
        return True

    def extend(index: int) -> bool:
        if index == len(order):
            return True
        f = order[index]
        for g in red_g.branch:
            if g in used or deg_g[g] != deg_f[f] or not consistent(f, g):
                continue
            assignment[f] = g
            used.add(g)
            if extend(index + 1):
                return True
            del assignment[f]
            used.discard(g)
        return False

    if not extend(0):
        return SubdivisionMatch(ok=False)

    vertex_map = dict(assignment)
    for (a, b), f_chains in table_f.items():
        ga, gb = assignment[a], assignment[b]
        for f_chain, g_chain in zip(f_chains, table_g[_pair(ga, gb)]):
            interior = list(g_chain.interior)
            if g_chain.start != ga:
                interior.reverse()
            for f_vertex, g_vertex in zip(f_chain.interior, interior):
                vertex_map[f_vertex] = g_vertex
    for f_cycle, g_cycle in zip(cycles_f, cycles_g):
        for f_vertex, g_vertex in zip(f_cycle.order, g_cycle.order):
            vertex_map[f_vertex] = g_vertex
    return SubdivisionMatch(ok=True, branch_map=tuple(vertex_map[v] for v in F.vertices()))


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Все упорядоченные разбиения total на parts неотрицательных слагаемых, лексикографически"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _slot_permutations(slots: Sequence[FrozenSet[FrozenSet[int]]], F: Graph) -> List[Tuple[int, ...]]:
    """Действие Aut(F) на слоты (цепи, циклы или ребра) как перестановки индексов"""
    index = {slot: i for i, slot in enumerate(slots)}
    permutations = []
    for pi in automorphisms(F, SearchBudget(settings.search_budget)):
        image = []
        for slot in slots:
            moved = frozenset(frozenset(pi[v] for v in edge) for edge in slot)
            image.append(index[moved])
        permutations.append(tuple(image))
    return permutations


def _is_orbit_minimum(distribution: Tuple[int, ...], permutations: Sequence[Tuple[int, ...]]) -> bool:
    return all(tuple(distribution[p] for p in perm) >= distribution for perm in permutations)


def distribution_orbits(F: Graph, total: int) -> List[Tuple[int, ...]]:
    """Распределения total новых вершин по ребрам F с точностью до автоморфизмов F (ребра в порядке F.edges())"""
    edges = F.edges()
    slots = [frozenset([frozenset(e)]) for e in edges]
    permutations = _slot_permutations(slots, F)
    return [d for d in _compositions(total, len(edges)) if _is_orbit_minimum(d, permutations)]


def enumerate_subdivisions(F: Graph, max_vertices: int, deduplicate: bool = True) -> Iterator[Graph]:
    """Подразбиения F с не более чем max_vertices вершинами по неубыванию размера, по одному на класс изоморфизма"""
    reduction = topological_reduction(F)
    slot_edges: List[Tuple[int, int]] = []
    slots: List[FrozenSet[FrozenSet[int]]] = []
    for chain in reduction.chains:
        walk = chain.vertices()
        slot_edges.append((walk[0], walk[1]))
        slots.append(chain.edge_set())
    for cycle in reduction.cycles:
        slot_edges.append((cycle.order[0], cycle.order[1]))
        slots.append(cycle.edge_set())
    permutations = _slot_permutations(slots, F)
    logger.debug(f"Subdividing {F!r}: {len(slots)} slots, {len(permutations)} automorphisms")

    for total in range(max_vertices - F.vertex_count + 1):
        seen = set()
        for distribution in _compositions(total, len(slots)):
            if not _is_orbit_minimum(distribution, permutations):
                continue
            extra = {_pair(*e): 0 for e in F.edges()}
            for (u, v), count in zip(slot_edges, distribution):
                extra[_pair(u, v)] = count
            graph = subdivide(F, extra)
            if deduplicate:
                code = canonical_code(graph)
                if code in seen:
                    continue
                seen.add(code)
            yield graph
