import logging

from src.cli.common import load_graph, verdict_report
from src.models.domain import CleanStatus
from src.services.obstructions import t_clean_check

logger = logging.getLogger(__name__)


def run(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    verdict = t_clean_check(G, args.t, args.budget)
    data = {
        "status": verdict.status.value,
        "nodes": verdict.nodes,
        "patterns_checked": verdict.patterns_checked,
        "skipped_families": verdict.skipped_families,
    }
    if verdict.status == CleanStatus.OBSTRUCTION:
        data["kind"] = verdict.kind.value
        data["embedding"] = list(verdict.embedding.mapping)
        return verdict_report(args, False, f"not {args.t}-clean: {verdict.kind.value}", hashes, **data)
    if verdict.status == CleanStatus.INCONCLUSIVE:
        return verdict_report(args, None, "inconclusive: search budget exhausted", hashes, **data)
    return verdict_report(args, True, f"{args.t}-clean", hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("clean", help="Проверка t-чистоты")
    parser.add_argument("--t", type=int, required=True)
    parser.add_argument("--input", required=True, help="Граф (.gr или .json)")
    parser.add_argument("--budget", type=int, help="Бюджет узлов перебора")
    parser.set_defaults(handler=run)
