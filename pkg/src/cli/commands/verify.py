import logging

from src.cli.common import UsageError, file_hash, load_graph, parse_vertices, verdict_report
from src.services.acceptance import CRITERIA, run_suite
from src.services.treewidth import verify_decomposition
from src.storage.pace_store import read_td

logger = logging.getLogger(__name__)


def run_suite_command(args):
    only = parse_vertices(args.only) if args.only else None
    unknown = sorted(set(only or ()) - set(CRITERIA))
    if unknown:
        raise UsageError(f"unknown criteria {unknown}; known 1..{max(CRITERIA)}")
    results = run_suite(seed=args.seed or 0, only=only, workers=args.workers)
    failed = [r.number for r in results if not r.passed]
    verdict = "all criteria pass" if not failed else f"criteria failed: {failed}"
    report = verdict_report(args, not failed, verdict, passed=len(results) - len(failed), failed=failed)
    report.criteria = results
    return report


def run_td(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    hashes[args.decomposition] = file_hash(args.decomposition)
    td = read_td(args.decomposition)
    result = verify_decomposition(G, td)
    verdict = f"valid decomposition of width {td.width}" if result else "invalid decomposition"
    return verdict_report(args, result.ok, verdict, hashes, width=td.width, violation=result.violation)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Наборы проверок приемки и проверка декомпозиций")
    kinds = parser.add_subparsers(dest="what", required=True)

    p = kinds.add_parser("suite", help="Все критерии приемки (таблица прошел/не прошел)")
    p.add_argument("--only", help="Номера критериев через запятую")
    p.add_argument("--workers", type=int, help="Потоков для независимых экземпляров")
    p.set_defaults(handler=run_suite_command)

    p = kinds.add_parser("td", help="Проверка .td независимо от решателя")
    p.add_argument("--input", required=True, help="Граф (.gr или .json)")
    p.add_argument("--decomposition", required=True, help="Файл .td")
    p.set_defaults(handler=run_td)
