import logging
from pathlib import Path

from src.cli.common import UsageError, file_hash, verdict_report
from src.services.language import (
    brute_force_unavoidable,
    minimal_c,
    tassel_oracle,
    tasselled_decide,
    tasselled_search,
    unavoidable,
)
from src.storage.pace_store import read_gr
from src.storage.pattern_store import read_patterns

logger = logging.getLogger(__name__)


def _c_value(text: str):
    if text == "auto":
        return None
    try:
        c = int(text)
    except ValueError:
        raise UsageError(f"--c expects an integer or 'auto', got {text!r}")
    if c < 1:
        raise UsageError(f"--c must be >= 1, got {c}")
    return c


def _load_patterns(args, hashes):
    hashes[args.patterns] = file_hash(args.patterns)
    return read_patterns(args.patterns)


def run_unavoidable(args):
    hashes = {}
    patterns = _load_patterns(args, hashes)
    c = _c_value(args.c)

    if c is None:
        if args.brute_force:
            raise UsageError("--brute-force needs an explicit --c")
        result = minimal_c(patterns)
        if result.c_min is None:
            witness = result.checked[0].witness
            return verdict_report(args, False, f"not c-unavoidable for any c (witness at c={result.s})", hashes,
                                  s=result.s, witness=witness)
        return verdict_report(args, True, f"{result.c_min}-unavoidable (minimal c)", hashes,
                              c_min=result.c_min, s=result.s)

    verdict = brute_force_unavoidable(patterns, c) if args.brute_force else unavoidable(patterns, c)
    data = {"c": c, "method": verdict.method, "states": verdict.states, "witness": verdict.witness}
    text = f"{c}-unavoidable" if verdict.unavoidable else f"not {c}-unavoidable"
    return verdict_report(args, verdict.unavoidable, text, hashes, **data)


def run_witness(args):
    hashes = {}
    patterns = _load_patterns(args, hashes)
    c = _c_value(args.c)
    if c is None:
        raise UsageError("lang witness needs an explicit --c")
    verdict = unavoidable(patterns, c)
    report = verdict_report(args, verdict.unavoidable, f"{c}-unavoidable" if verdict.unavoidable else "witness found",
                            hashes, c=c, witness=verdict.witness)
    report.output = verdict.witness
    return report


def run_tasselled(args):
    hashes = {}
    directory = Path(args.graphs)
    files = sorted(directory.glob("*.gr"))
    if not files:
        raise UsageError(f"no .gr files in {directory}")
    family = []
    for path in files:
        hashes[str(path)] = file_hash(str(path))
        family.append(read_gr(path))
    c = _c_value(args.c)

    if c is None:
        search = tasselled_search(family)
        data = {"bound": search.bound, "c_min": search.c_min, "graphs": len(family)}
        last = search.verdicts[-1]
        if not search.tasselled:
            data.update(witness=last.witness, explanation=last.explanation)
        decided_c = search.c_min
        holds = search.tasselled
        text = f"tasselled from c={search.c_min}" if holds else f"not tasselled (checked up to c={search.bound})"
    else:
        verdict = tasselled_decide(family, c)
        data = {"c": c, "graphs": len(family), "states": verdict.states, "witness": verdict.witness,
                "explanation": verdict.explanation}
        decided_c = c
        holds = verdict.tasselled
        text = f"{c}-tasselled" if holds else f"not {c}-tasselled"

    if args.oracle_length and decided_c is not None:
        oracle = tassel_oracle(family, decided_c, args.oracle_length)
        data["oracle"] = {
            "all_covered": oracle.all_covered,
            "paths": oracle.paths,
            "tassels_checked": oracle.tassels_checked,
            "counterexample": oracle.counterexample,
        }
        if oracle.all_covered != holds:
            logger.warning(f"Tassel oracle disagrees at c={decided_c}: counterexample {oracle.counterexample}")
    return verdict_report(args, holds, text, hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("lang", help="c-неизбежность строк и кисточность семейств")
    kinds = parser.add_subparsers(dest="what", required=True)

    p = kinds.add_parser("unavoidable", help="c-неизбежность множества строк")
    p.add_argument("--patterns", required=True, help="Файл строк")
    p.add_argument("--c", default="auto", help="Число или auto (наименьшее c)")
    p.add_argument("--brute-force", action="store_true", help="Переборный оракул вместо автомата")
    p.set_defaults(handler=run_unavoidable)

    p = kinds.add_parser("tasselled", help="Кисточность конечного семейства графов")
    p.add_argument("--graphs", required=True, help="Каталог с файлами .gr")
    p.add_argument("--c", default="auto")
    p.add_argument("--oracle-length", type=int, help="Сверить с перебором кисточек до этой длины пряжи")
    p.set_defaults(handler=run_tasselled)

    p = kinds.add_parser("witness", help="Печать кратчайшей непокрытой c-дополненной строки")
    p.add_argument("--patterns", required=True)
    p.add_argument("--c", required=True)
    p.set_defaults(handler=run_witness)
