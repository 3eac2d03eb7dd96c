import json
import logging
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from src.core.exceptions import FormatException, GraphException, WitnessException
from src.models.domain import (
    ArrayWitness,
    BlockCertificate,
    Cluster,
    Hassle,
    PathSystem,
    Tassel,
    WebCertificate,
    WebLink,
)
from src.models.graph import Graph
from src.services.graph_ops import graph_from_edges

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class WitnessKind(str, Enum):
    TASSEL = "tassel"
    HASSLE = "hassle"
    ARRAY = "array"
    CLUSTER = "cluster"
    POLYPATH = "polypath"
    BLOCK = "block"
    WEB = "web"


class GraphDocument(BaseModel):
    """JSON-форма графа, вершины с 0"""
    n: int = Field(..., ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)
    labels: Optional[Dict[str, str]] = None


class PathSystemDocument(BaseModel):
    x: int
    y: int
    paths: List[List[int]]


class LinkDocument(BaseModel):
    x: int
    y: int
    path: List[int]


class WitnessDocument(BaseModel):
    """JSON-форма свидетеля; набор полей зависит от kind"""
    kind: WitnessKind
    neck: Optional[int] = None
    paths: Optional[List[List[int]]] = None
    walks: Optional[List[List[int]]] = None
    apexes: Optional[List[int]] = None
    block: Optional[List[int]] = None
    systems: Optional[List[PathSystemDocument]] = None
    web: Optional[List[int]] = None
    links: Optional[List[LinkDocument]] = None


def graph_to_json(G: Graph) -> dict:
    document = {"n": G.vertex_count, "edges": [list(e) for e in G.edges()]}
    if G.labels is not None:
        document["labels"] = {str(v): label for v, label in enumerate(G.labels) if label}
    return document


def graph_from_json(data: Union[str, dict]) -> Graph:
    try:
        document = GraphDocument.model_validate_json(data) if isinstance(data, str) else GraphDocument.model_validate(data)
    except ValidationError as e:
        raise FormatException(f"invalid graph document: {e.errors()[0]['msg']}")
    labels = None
    if document.labels is not None:
        labels = [""] * document.n
        for key, label in document.labels.items():
            if not key.isdigit() or int(key) >= document.n:
                raise FormatException(f"label for unknown vertex {key!r}")
            labels[int(key)] = label
    try:
        return graph_from_edges(document.n, document.edges, labels)
    except GraphException as e:
        raise FormatException(str(e))


def _require(document: WitnessDocument, *fields: str) -> None:
    for name in fields:
        if getattr(document, name) is None:
            raise WitnessException(name, f"required for a {document.kind.value} witness")


def _sequences(items: List[List[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(item) for item in items)


def witness_from_json(data: Union[str, dict], G: Graph):
    """Свидетель нужного типа по полю kind"""
    try:
        document = WitnessDocument.model_validate_json(data) if isinstance(data, str) else WitnessDocument.model_validate(data)
    except ValidationError as e:
        raise FormatException(f"invalid witness document: {e.errors()[0]['msg']}")

    kind = document.kind
    if kind == WitnessKind.TASSEL:
        _require(document, "neck", "paths")
        return Tassel(graph=G, neck=document.neck, paths=_sequences(document.paths))
    if kind == WitnessKind.HASSLE:
        _require(document, "neck", "walks")
        return Hassle(graph=G, neck=document.neck, walks=_sequences(document.walks))
    if kind == WitnessKind.ARRAY:
        _require(document, "paths", "apexes")
        return ArrayWitness(graph=G, paths=_sequences(document.paths), apexes=tuple(document.apexes))
    if kind == WitnessKind.CLUSTER:
        _require(document, "paths", "apexes")
        return Cluster(apexes=tuple(document.apexes), paths=_sequences(document.paths))
    if kind == WitnessKind.POLYPATH:
        _require(document, "paths")
        return _sequences(document.paths)
    if kind == WitnessKind.BLOCK:
        _require(document, "block", "systems")
        systems = tuple(PathSystem(x=s.x, y=s.y, paths=_sequences(s.paths)) for s in document.systems)
        return BlockCertificate(block=tuple(document.block), systems=systems)
    _require(document, "web", "links")
    links = tuple(WebLink(x=link.x, y=link.y, path=tuple(link.path)) for link in document.links)
    return WebCertificate(web=tuple(document.web), links=links)


def witness_to_json(witness) -> dict:
    if isinstance(witness, Tassel):
        return {"kind": "tassel", "neck": witness.neck, "paths": [list(p) for p in witness.paths]}
    if isinstance(witness, Hassle):
        return {"kind": "hassle", "neck": witness.neck, "walks": [list(w) for w in witness.walks]}
    if isinstance(witness, ArrayWitness):
        return {"kind": "array", "paths": [list(p) for p in witness.paths], "apexes": list(witness.apexes)}
    if isinstance(witness, Cluster):
        return {"kind": "cluster", "paths": [list(p) for p in witness.paths], "apexes": list(witness.apexes)}
    if isinstance(witness, BlockCertificate):
        return {
            "kind": "block",
            "block": list(witness.block),
            "systems": [{"x": s.x, "y": s.y, "paths": [list(p) for p in s.paths]} for s in witness.systems],
        }
    if isinstance(witness, WebCertificate):
        return {
            "kind": "web",
            "web": list(witness.web),
            "links": [{"x": link.x, "y": link.y, "path": list(link.path)} for link in witness.links],
        }
    if isinstance(witness, (list, tuple)):
        return {"kind": "polypath", "paths": [list(p) for p in witness]}
    raise WitnessException("kind", f"cannot serialise {type(witness).__name__}")


def read_json(path: PathLike) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise FormatException(f"{path}: {e.msg}", e.lineno)


def write_json(path: PathLike, document: dict) -> None:
    Path(path).write_text(json.dumps(document, indent=2, ensure_ascii=False) + "\n")
    logger.debug(f"Wrote {document.get('kind', 'graph')} document to {path}")
