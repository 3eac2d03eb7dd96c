import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from src.core.exceptions import FormatException, GraphException
from src.models.domain import TreeDecomposition
from src.models.graph import Graph
from src.services.graph_ops import graph_from_edges

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _ints(parts: List[str], line: int) -> List[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatException(f"expected integers, got {' '.join(parts)!r}", line)


def format_gr(G: Graph) -> str:
    """Граф в формате PACE .gr (вершины с 1, ребра по возрастанию)"""
    lines = [f"p tw {G.vertex_count} {G.edge_count}"]
    lines += [f"{u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_gr(text: str) -> Graph:
    """Разбор .gr: заголовок p tw n m, строки ребер u v, комментарии c"""
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if header is not None:
                raise FormatException("second header line", number)
            if len(parts) != 4 or parts[1] != "tw":
                raise FormatException(f"malformed header {raw.strip()!r}, expected 'p tw <n> <m>'", number)
            n, m = _ints(parts[2:], number)
            header = (n, m)
            continue
        if header is None:
            raise FormatException("edge line before the 'p tw' header", number)
        if len(parts) != 2:
            raise FormatException(f"edge line needs two vertices, got {raw.strip()!r}", number)
        u, v = _ints(parts, number)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatException(f"edge ({u}, {v}) outside 1..{n}", number)
        if u == v:
            raise FormatException(f"self-loop at vertex {u}", number)
        edges.append((u - 1, v - 1))
    if header is None:
        raise FormatException("missing 'p tw' header")
    n, m = header
    if len(edges) != m:
        raise FormatException(f"header declares {m} edges, found {len(edges)}")
    try:
        G = graph_from_edges(n, edges)
    except GraphException as e:
        raise FormatException(str(e))
    if G.edge_count != m:
        raise FormatException(f"{m - G.edge_count} duplicate edges")
    return G


def format_td(td: TreeDecomposition) -> str:
    """Декомпозиция в формате PACE .td: s td, строки мешков b, ребра дерева"""
    lines = [f"s td {len(td.bags)} {td.width + 1} {td.vertex_count}"]
    for index, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(index)] + [str(v + 1) for v in bag]))
    lines += [f"{a + 1} {b + 1}" for a, b in td.tree_edges]
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> TreeDecomposition:
    """Разбор .td; номера мешков должны быть 1..#bags"""
    header: Optional[Tuple[int, int, int]] = None
    bags: dict = {}
    edges: List[Tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "s":
            if header is not None:
                raise FormatException("second solution line", number)
            if len(parts) != 5 or parts[1] != "td":
                raise FormatException(f"malformed solution line {raw.strip()!r}", number)
            count, size, n = _ints(parts[2:], number)
            header = (count, size, n)
            continue
        if header is None:
            raise FormatException("content before the 's td' line", number)
        if parts[0] == "b":
            if len(parts) < 2:
                raise FormatException("bag line without an index", number)
            index, *members = _ints(parts[1:], number)
            if not 1 <= index <= header[0]:
                raise FormatException(f"bag index {index} outside 1..{header[0]}", number)
            if index in bags:
                raise FormatException(f"bag {index} defined twice", number)
            if any(not 1 <= v <= header[2] for v in members):
                raise FormatException(f"bag {index} names a vertex outside 1..{header[2]}", number)
            bags[index] = tuple(sorted({v - 1 for v in members}))
            continue
        if len(parts) != 2:
            raise FormatException(f"tree edge line needs two bag indices, got {raw.strip()!r}", number)
        a, b = _ints(parts, number)
        if not (1 <= a <= header[0] and 1 <= b <= header[0]):
            raise FormatException(f"tree edge ({a}, {b}) outside 1..{header[0]}", number)
        edges.append((a - 1, b - 1))
    if header is None:
        raise FormatException("missing 's td' line")
    count, size, n = header
    if sorted(bags) != list(range(1, count + 1)):
        raise FormatException(f"declared {count} bags, found {len(bags)}")
    td = TreeDecomposition(vertex_count=n, bags=tuple(bags[i] for i in range(1, count + 1)), tree_edges=tuple(edges))
    if count and td.width + 1 != size:
        raise FormatException(f"declared largest bag {size}, found {td.width + 1}")
    return td


def read_gr(path: PathLike) -> Graph:
    G = parse_gr(Path(path).read_text())
    logger.debug(f"Read {G!r} from {path}")
    return G


def write_gr(path: PathLike, G: Graph) -> None:
    Path(path).write_text(format_gr(G))
    logger.debug(f"Wrote {G!r} to {path}")


def read_td(path: PathLike) -> TreeDecomposition:
    return parse_td(Path(path).read_text())


def write_td(path: PathLike, td: TreeDecomposition) -> None:
    Path(path).write_text(format_td(td))
    logger.debug(f"Wrote decomposition with {len(td.bags)} bags of width {td.width} to {path}")
