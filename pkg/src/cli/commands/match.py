import logging

from src.cli.common import load_graph, verdict_report
from src.models.domain import SearchStatus
from src.services.isomorphism import find_induced
from src.services.subdivisions import is_subdivision_of

logger = logging.getLogger(__name__)


def run(args):
    hashes = {}
    H = load_graph(args.pattern, hashes)
    G = load_graph(args.host, hashes)

    if args.mode == "subdivision":
        match = is_subdivision_of(G, H)
        verdict = "host is a subdivision of the pattern" if match else "host is not a subdivision of the pattern"
        branch_map = list(match.branch_map) if match.branch_map is not None else None
        return verdict_report(args, match.ok, verdict, hashes, branch_map=branch_map)

    result = find_induced(H, G, limit=args.budget)
    data = {"status": result.status.value, "nodes": result.nodes}
    if result.status == SearchStatus.BUDGET_EXHAUSTED:
        return verdict_report(args, None, "inconclusive: search budget exhausted", hashes, **data)
    if result.found:
        data["embedding"] = list(result.embedding.mapping)
        return verdict_report(args, True, "induced copy found", hashes, **data)
    return verdict_report(args, False, "no induced copy", hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("match", help="Индуцированное вложение или проверка подразбиения")
    parser.add_argument("--pattern", required=True, help="Образец H")
    parser.add_argument("--host", required=True, help="Граф G")
    parser.add_argument("--budget", type=int, help="Бюджет узлов перебора")
    parser.add_argument("--mode", choices=["induced", "subdivision"], default="induced")
    parser.set_defaults(handler=run)
