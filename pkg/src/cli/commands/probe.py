import logging

from src.cli.common import UsageError, load_graph, load_witness, verdict_report
from src.core.exceptions import WitnessException
from src.models.domain import BlockCertificate, Cluster, WebCertificate
from src.services.probes import (
    check_bipartite_minor,
    check_cluster,
    check_d_meager,
    check_polypath,
    cluster_minor_witness,
    fancy_minor_witness,
    fancy_subsets,
    is_d_loose,
    verify_web,
    web_from_block_certificate,
)

logger = logging.getLogger(__name__)


def _polypath(witness):
    if isinstance(witness, Cluster):
        return list(witness.paths)
    if isinstance(witness, tuple) and all(isinstance(p, tuple) for p in witness):
        return list(witness)
    raise WitnessException("kind", f"expected a polypath witness, got {type(witness).__name__}")


def run_cluster(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    cluster = load_witness(args.witness, G, hashes)
    if not isinstance(cluster, Cluster):
        raise WitnessException("kind", f"expected a cluster witness, got {type(cluster).__name__}")
    result = check_cluster(G, cluster.apexes, cluster.paths, args.strict)
    if result and args.d is not None:
        result = check_d_meager(G, cluster.apexes, cluster.paths, args.d)
    s, l = len(cluster.apexes), len(cluster.paths)
    data = {"s": s, "l": l, "violation": result.violation}
    if result:
        minor = cluster_minor_witness(cluster)
        data["minor_ok"] = check_bipartite_minor(G, minor).ok
    label = f"({s}, {l})-cluster" + (f", {args.d}-meager" if args.d is not None else "")
    return verdict_report(args, result.ok, label if result else f"not a {label}", hashes, **data)


def run_polypath(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    W = _polypath(load_witness(args.witness, G, hashes))
    result = check_polypath(G, W)
    data = {"paths": len(W), "violation": result.violation}
    holds = result.ok
    if holds and args.d is not None:
        loose = is_d_loose(G, W, args.d)
        data["loose"] = loose
        holds = loose
    if holds and args.fancy is not None:
        subsets = fancy_subsets(G, W, args.fancy)
        data["fancy_subsets"] = [list(s) for s in subsets]
        if subsets:
            data["minor_ok"] = check_bipartite_minor(G, fancy_minor_witness(W, subsets[0])).ok
        holds = bool(subsets)
    verdict = "polypath" if result else "not a polypath"
    if result and args.d is not None:
        verdict += f", {'' if data['loose'] else 'not '}{args.d}-loose"
    if result and args.fancy is not None:
        verdict += f", {'' if data['fancy_subsets'] else 'not '}{args.fancy}-fancy"
    return verdict_report(args, holds, verdict, hashes, **data)


def run_web(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    cert = load_witness(args.witness, G, hashes)
    if isinstance(cert, BlockCertificate):
        cert = web_from_block_certificate(cert)
    if not isinstance(cert, WebCertificate):
        raise WitnessException("kind", f"expected a web or block certificate, got {type(cert).__name__}")
    result = verify_web(G, cert)
    w = len(cert.web)
    return verdict_report(args, result.ok, f"{w}-web" if result else f"not a {w}-web", hashes,
                          violation=result.violation)


def run_minor(args):
    hashes = {}
    G = load_graph(args.input, hashes)
    witness = load_witness(args.witness, G, hashes)
    if isinstance(witness, Cluster):
        minor = cluster_minor_witness(witness)
    else:
        if args.fancy is None:
            raise UsageError("probe minor on a polypath needs --fancy with the index set, e.g. 0,2")
        W = _polypath(witness)
        subset = [int(i) for i in args.fancy.split(",") if i.strip()]
        minor = fancy_minor_witness(W, subset)
    result = check_bipartite_minor(G, minor)
    a, b = len(minor.left), len(minor.right)
    return verdict_report(args, result.ok, f"K_{{{a},{b}}} minor" if result else f"no K_{{{a},{b}}} minor model",
                          hashes, violation=result.violation)


def register(subparsers) -> None:
    parser = subparsers.add_parser("probe", help="Зонды структур: кластеры, полипути, паутины, миноры")
    kinds = parser.add_subparsers(dest="what", required=True)

    def inputs(p):
        p.add_argument("--input", required=True, help="Граф (.gr или .json)")
        p.add_argument("--witness", required=True, help="JSON-свидетель")

    p = kinds.add_parser("cluster", help="(s, l)-кластер и d-скудность")
    inputs(p)
    p.add_argument("--d", type=int)
    p.add_argument("--allow-joined", dest="strict", action="store_false",
                   help="Допускать ребра между путями (только непересекаемость)")
    p.set_defaults(handler=run_cluster)

    p = kinds.add_parser("polypath", help="Полипуть, d-свобода и w'-причудливость")
    inputs(p)
    p.add_argument("--d", type=int)
    p.add_argument("--fancy", type=int, help="Размер w' причудливого подмножества")
    p.set_defaults(handler=run_polypath)

    p = kinds.add_parser("web", help="w-паутина (сертификат паутины или блока)")
    inputs(p)
    p.set_defaults(handler=run_web)

    p = kinds.add_parser("minor", help="Модель минора K_{s,l} или K_{w',w-w'}")
    inputs(p)
    p.add_argument("--fancy", help="Индексы путей левой доли через запятую")
    p.set_defaults(handler=run_minor)
