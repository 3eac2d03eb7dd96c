import logging

from src.cli.common import load_graph, verdict_report
from src.services.treewidth import treewidth_exact, treewidth_lowerbound
from src.storage.pace_store import write_td

logger = logging.getLogger(__name__)


def run(args):
    hashes = {}
    G = load_graph(args.input, hashes)

    lower = treewidth_lowerbound(G)
    if args.lower_bound_only:
        logger.info(f"Lower bound for {G!r}: {lower}")
        return verdict_report(args, True, f"treewidth >= {lower}", hashes, lower_bound=lower)

    width, td = treewidth_exact(G)
    data = {"treewidth": width, "lower_bound": lower, "bags": len(td.bags)}
    if args.decomposition:
        write_td(args.decomposition, td)
        data["decomposition_file"] = args.decomposition
    return verdict_report(args, True, f"treewidth = {width}", hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("tw", help="Ширина дерева: точное значение с декомпозицией или нижняя оценка")
    parser.add_argument("--input", required=True, help="Граф (.gr или .json)")
    parser.add_argument("--decomposition", help="Куда записать .td")
    parser.add_argument("--lower-bound-only", action="store_true")
    parser.set_defaults(handler=run)
