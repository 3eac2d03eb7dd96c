import hashlib
import logging
from pathlib import Path
from typing import Dict, Optional

from src.core.exceptions import ToolkitException
from src.models.graph import Graph
from src.models.report import ExitCode, RunReport
from src.storage.json_store import graph_from_json, read_json, witness_from_json
from src.storage.pace_store import read_gr

logger = logging.getLogger(__name__)


class UsageError(ToolkitException):
    """Неверные аргументы командной строки"""
    pass


def file_hash(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_graph(path: str, hashes: Optional[Dict[str, str]] = None) -> Graph:
    """Граф из .gr или из JSON-формы (по расширению)"""
    if hashes is not None:
        hashes[path] = file_hash(path)
    if path.endswith(".json"):
        return graph_from_json(read_json(path))
    return read_gr(path)


def load_witness(path: str, G: Graph, hashes: Optional[Dict[str, str]] = None):
    if hashes is not None:
        hashes[path] = file_hash(path)
    return witness_from_json(read_json(path), G)


def require_seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"'{args.command}' is randomised: pass --seed")
    return args.seed


def verdict_report(args, holds: Optional[bool], verdict: str, hashes: Optional[Dict[str, str]] = None, **data) -> RunReport:
    """holds=None - ответ не получен (бюджет), код 2"""
    if holds is None:
        code = ExitCode.ERROR
    else:
        code = ExitCode.HOLDS if holds else ExitCode.FAILS
    return RunReport(
        seed=getattr(args, "seed", None),
        input_hashes=hashes or {},
        verdict=verdict,
        exit_code=code,
        data=data,
    )


def parse_vertices(text: str):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
