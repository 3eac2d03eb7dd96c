import logging
from collections import deque
from typing import Dict, List

from src.core.exceptions import GraphException
from src.models.graph import Graph

logger = logging.getLogger(__name__)


def _node_in(v: int) -> int:
    return 2 * v


def _node_out(v: int) -> int:
    return 2 * v + 1


class _SplitNetwork:
    """Сеть с расщеплением вершин: v_in -> v_out емкости 1 для внутренних вершин"""

    def __init__(self, G: Graph, x: int, y: int):
        self.capacity: Dict[int, Dict[int, int]] = {node: {} for node in range(2 * G.vertex_count)}
        unbounded = G.vertex_count + 1
        for v in G.vertices():
            self._add(_node_in(v), _node_out(v), unbounded if v in (x, y) else 1)
        for u, v in G.edges():
            if {u, v} == {x, y}:
                continue
            self._add(_node_out(u), _node_in(v), 1)
            self._add(_node_out(v), _node_in(u), 1)
        self.flow: Dict[int, Dict[int, int]] = {node: {} for node in self.capacity}

    def _add(self, a: int, b: int, cap: int) -> None:
        self.capacity[a][b] = self.capacity[a].get(b, 0) + cap
        self.capacity[b].setdefault(a, 0)

    def residual(self, a: int, b: int) -> int:
        return self.capacity[a].get(b, 0) - self.flow[a].get(b, 0)

    def augment(self, source: int, sink: int) -> bool:
        """Один увеличивающий путь BFS (Эдмондс–Карп), соседи в порядке id"""
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(self.capacity[a]):
                if b not in parent and self.residual(a, b) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return False
        b = sink
        while b != source:
            a = parent[b]
            self.flow[a][b] = self.flow[a].get(b, 0) + 1
            self.flow[b][a] = self.flow[b].get(a, 0) - 1
            b = a
        return True


def disjoint_paths(G: Graph, x: int, y: int) -> List[List[int]]:
    """Максимальное семейство попарно внутренне непересекающихся x–y путей"""
    if x == y:
        raise GraphException(f"disjoint paths need distinct ends, got {x} twice")
    for v in (x, y):
        if not 0 <= v < G.vertex_count:
            raise GraphException(f"vertex {v} outside 0..{G.vertex_count - 1}")

    network = _SplitNetwork(G, x, y)
    source, sink = _node_out(x), _node_in(y)
    while network.augment(source, sink):
        pass

    paths: List[List[int]] = []
    if G.has_edge(x, y):
        paths.append([x, y])
    # Разложение потока: из x_out идем по единицам потока до y_in
    for start in sorted(network.flow[source]):
        if network.flow[source][start] <= 0:
            continue
        path = [x]
        node = start
        while node != sink:
            v = node // 2
            path.append(v)
            nxt = next(b for b in sorted(network.flow[_node_out(v)]) if network.flow[_node_out(v)][b] > 0)
            network.flow[_node_out(v)][nxt] -= 1
            node = nxt
        path.append(y)
        paths.append(path)
    logger.debug(f"Found {len(paths)} internally disjoint {x}-{y} paths")
    return paths


def disjoint_paths_count(G: Graph, x: int, y: int) -> int:
    """Число попарно внутренне непересекающихся x–y путей (ребро xy считается путем)"""
    return len(disjoint_paths(G, x, y))
