import logging
from pathlib import Path

from src.cli.common import UsageError, require_seed, verdict_report
from src.models.domain import ObstructionKind
from src.models.graph import Graph
from src.services.arrays import build_tassel, random_array, random_tassel, strand_from_pattern
from src.services.hassles import random_meager_cluster
from src.services.language import hab_family
from src.services.obstructions import generate_obstruction, wall
from src.storage.json_store import graph_to_json, witness_to_json, write_json
from src.storage.pace_store import write_gr

logger = logging.getLogger(__name__)


def _emit(args, G: Graph, witness=None, **extra):
    """Записать граф (и свидетеля) в файлы или вернуть их в отчете"""
    data = {"vertices": G.vertex_count, "edges": G.edge_count, **extra}
    if args.out:
        write_gr(args.out, G)
        data["graph_file"] = args.out
    else:
        data["graph"] = graph_to_json(G)
    if witness is not None:
        if args.witness_out:
            write_json(args.witness_out, witness_to_json(witness))
            data["witness_file"] = args.witness_out
        else:
            data["witness"] = witness_to_json(witness)
    logger.info(f"Generated {G!r}")
    return verdict_report(args, True, "built", **data)


def run_wall(args):
    return _emit(args, wall(args.t), t=args.t)


def run_obstruction(args):
    kind = ObstructionKind(args.kind)
    return _emit(args, generate_obstruction(kind, args.t, args.subdivide), kind=kind.value, t=args.t)


def run_array(args):
    seed = require_seed(args)
    G, witness = random_array(args.n, (args.min_len, args.max_len), seed)
    return _emit(args, G, witness, n=args.n)


def run_tassel(args):
    if args.pattern:
        tassel = build_tassel(strand_from_pattern(args.pattern), args.count)
    else:
        seed = require_seed(args)
        tassel = random_tassel(args.c, args.count, (args.min_len, args.max_len), seed)
    return _emit(args, tassel.graph, tassel, paths=len(tassel.paths))


def run_cluster(args):
    seed = require_seed(args)
    G, cluster = random_meager_cluster(args.c, args.d, seed)
    return _emit(args, G, cluster, apexes=len(cluster.apexes), paths=len(cluster.paths))


def run_hab(args):
    strands = hab_family(args.a, args.b)
    if not args.out_dir:
        raise UsageError("gen hab needs --out-dir")
    target = Path(args.out_dir)
    target.mkdir(parents=True, exist_ok=True)
    files = []
    for index, strand in enumerate(strands):
        path = target / f"hab_{args.a}_{args.b}_{index:03d}.gr"
        write_gr(path, strand.graph)
        files.append(str(path))
    return verdict_report(args, True, "built", graphs=files)


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Генерация графов и свидетелей")
    kinds = parser.add_subparsers(dest="what", required=True)

    def outputs(p):
        p.add_argument("--out", help="Файл .gr")
        p.add_argument("--witness-out", help="JSON-файл свидетеля")

    p = kinds.add_parser("wall", help="Стена W_{t×t}")
    p.add_argument("--t", type=int, required=True)
    outputs(p)
    p.set_defaults(handler=run_wall)

    p = kinds.add_parser("obstruction", help="t-базовое препятствие")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in ObstructionKind])
    p.add_argument("--subdivide", type=int, default=0, help="Новых вершин на каждое ребро стены")
    outputs(p)
    p.set_defaults(handler=run_obstruction)

    p = kinds.add_parser("array", help="Случайный n-массив")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-len", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    outputs(p)
    p.set_defaults(handler=run_array)

    p = kinds.add_parser("tassel", help="Кисточка по шаблону или случайная c-кисточка")
    p.add_argument("--pattern", help="Двоичная строка пряжи")
    p.add_argument("--count", type=int, required=True, help="Число путей")
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--min-len", type=int, default=7)
    p.add_argument("--max-len", type=int, default=9)
    outputs(p)
    p.set_defaults(handler=run_tassel)

    p = kinds.add_parser("cluster", help="Случайный d-скудный (2cd, 2c²d)-кластер")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    outputs(p)
    p.set_defaults(handler=run_cluster)

    p = kinds.add_parser("hab", help="Семейство H_{a,b} в каталог")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out-dir")
    p.set_defaults(handler=run_hab)
