import logging

from src.cli.common import UsageError, load_graph, load_witness, verdict_report
from src.core.exceptions import WitnessException
from src.models.domain import Cluster, Hassle, Tassel
from src.services.arrays import array_from_tassel, is_n_array
from src.services.hassles import hassle_from_cluster, tassel_from_hassle_walk, tassel_from_walk
from src.storage.json_store import graph_to_json, witness_to_json, write_json
from src.storage.pace_store import write_gr

logger = logging.getLogger(__name__)


def _expect(witness, kind, name: str):
    if not isinstance(witness, kind):
        raise WitnessException("kind", f"expected a {name} witness, got {type(witness).__name__}")
    return witness


def _output(args, graph, witness, **data):
    if args.out:
        write_gr(args.out, graph)
        data["graph_file"] = args.out
    else:
        data["graph"] = graph_to_json(graph)
    if args.witness_out:
        write_json(args.witness_out, witness_to_json(witness))
        data["witness_file"] = args.witness_out
    else:
        data["witness"] = witness_to_json(witness)
    return data


def run_array_from_tassel(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    tassel = _expect(load_witness(args.witness, G, hashes), Tassel, "tassel")
    graph, witness = array_from_tassel(tassel)
    d = len(tassel.paths)
    holds = is_n_array(graph, witness, d)
    data = _output(args, graph, witness, n=d, vertices=graph.vertex_count)
    return verdict_report(args, holds, f"{d}-array built" if holds else "array check failed", hashes, **data)


def run_tassel_from_walk(args):
    hashes = {}
    if args.input:
        G = load_graph(args.input, hashes)
        hassle = _expect(load_witness(args.witness, G, hashes), Hassle, "hassle")
        tassel = tassel_from_hassle_walk(hassle, args.index, args.c)
    else:
        if not args.bits:
            raise UsageError("tassel-from-walk needs --bits or --input with --witness")
        tassel = tassel_from_walk(list(range(len(args.bits))), args.bits, args.c)
    data = _output(args, tassel.graph, tassel, c=args.c, paths=len(tassel.paths))
    return verdict_report(args, True, f"{args.c}-tassel built", hashes, **data)


def run_hassle_from_cluster(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    cluster = _expect(load_witness(args.witness, G, hashes), Cluster, "cluster")
    hassle = hassle_from_cluster(G, cluster.apexes, cluster.paths, args.c, args.d)
    data = _output(args, hassle.graph, hassle, c=args.c, origin=list(hassle.origin or ()))
    return verdict_report(args, True, f"{args.c}-hassle extracted", hashes, **data)


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="Конструктивные преобразования")
    kinds = parser.add_subparsers(dest="what", required=True)

    def outputs(p):
        p.add_argument("--out", help="Файл .gr результата")
        p.add_argument("--witness-out", help="JSON-свидетель результата")

    p = kinds.add_parser("array-from-tassel", help="d-массив из кисточки с d путями")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", required=True)
    outputs(p)
    p.set_defaults(handler=run_array_from_tassel)

    p = kinds.add_parser("tassel-from-walk", help="c-кисточка T_W по битам шеи или по обходу хассла")
    p.add_argument("--bits", help="Смежность шеи с позициями обхода")
    p.add_argument("--input", help="Граф хассла")
    p.add_argument("--witness", help="JSON-свидетель хассла")
    p.add_argument("--index", type=int, default=0, help="Номер обхода")
    p.add_argument("--c", type=int, required=True)
    outputs(p)
    p.set_defaults(handler=run_tassel_from_walk)

    p = kinds.add_parser("hassle-from-cluster", help="c-хассл из d-скудного (2cd, 2c²d)-кластера")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    outputs(p)
    p.set_defaults(handler=run_hassle_from_cluster)
