import logging

from src.cli.common import UsageError, load_graph, load_witness, verdict_report
from src.core.exceptions import WitnessException
from src.models.domain import ArrayWitness, Hassle, Tassel
from src.services.arrays import check_array, check_tassel
from src.services.hassles import check_hassle

logger = logging.getLogger(__name__)

EXPECTED = {"tassel": Tassel, "hassle": Hassle, "array": ArrayWitness}


def run(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    witness = load_witness(args.witness, G, hashes)
    if not isinstance(witness, EXPECTED[args.structure]):
        raise WitnessException("kind", f"expected a {args.structure} witness, got {type(witness).__name__}")

    if args.structure == "array":
        if args.n is None:
            raise UsageError("check array needs --n")
        result = check_array(G, witness, args.n)
        parameter = {"n": args.n}
    else:
        if args.c is None:
            raise UsageError(f"check {args.structure} needs --c")
        checker = check_tassel if args.structure == "tassel" else check_hassle
        result = checker(witness, args.c)
        parameter = {"c": args.c}

    verdict = f"is a {args.structure}" if result else f"not a {args.structure}"
    logger.info(f"check {args.structure}: {verdict}")
    return verdict_report(args, result.ok, verdict, hashes, violation=result.violation, **parameter)


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="Проверка свидетеля кисточки, хассла или массива")
    parser.add_argument("structure", choices=sorted(EXPECTED))
    parser.add_argument("--input", required=True, help="Граф (.gr или .json)")
    parser.add_argument("--witness", required=True, help="JSON-свидетель")
    parser.add_argument("--c", type=int)
    parser.add_argument("--n", type=int)
    parser.set_defaults(handler=run)
