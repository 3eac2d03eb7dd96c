import logging

from src.cli.common import UsageError, load_graph, load_witness, parse_vertices, verdict_report
from src.core.exceptions import WitnessException
from src.models.domain import BlockCertificate
from src.services.probes import block_certificate, verify_block_certificate
from src.storage.json_store import witness_to_json, write_json

logger = logging.getLogger(__name__)


def run(args):
    hashes = {}
    G = load_graph(args.input, hashes)

    if args.check:
        cert = load_witness(args.check, G, hashes)
        if not isinstance(cert, BlockCertificate):
            raise WitnessException("kind", f"expected a block certificate, got {type(cert).__name__}")
        result = verify_block_certificate(G, cert, args.k, args.d, args.strong)
        label = f"{'strong ' if args.strong else ''}{args.k}-block"
        verdict = f"certificate proves a {label}" if result else f"certificate does not prove a {label}"
        return verdict_report(args, result.ok, verdict, hashes, violation=result.violation)

    if not args.vertices:
        raise UsageError("block needs --vertices or --check")
    B = parse_vertices(args.vertices)
    cert = block_certificate(G, B, args.k)
    if cert is None:
        return verdict_report(args, False, f"not a {args.k}-block", hashes, block=sorted(set(B)))
    data = {"block": list(cert.block)}
    if args.certificate:
        write_json(args.certificate, witness_to_json(cert))
        data["certificate_file"] = args.certificate
    else:
        data["certificate"] = witness_to_json(cert)
    return verdict_report(args, True, f"{args.k}-block", hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("block", help="k-блоки: решение по Менгеру и проверка сертификатов")
    parser.add_argument("--input", required=True, help="Граф (.gr или .json)")
    parser.add_argument("--vertices", help="Множество B через запятую")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--certificate", help="Куда записать сертификат")
    parser.add_argument("--check", help="Проверить готовый сертификат")
    parser.add_argument("--d", type=int, help="Ограничение длины путей (сертификат)")
    parser.add_argument("--strong", action="store_true", help="Сильный блок (сертификат)")
    parser.set_defaults(handler=run)
