"""Command-line interface.

Vertex ids in files, flags, and JSON output are 1-based, matching the
.cak format; the library API is 0-based. Output is byte-stable for
fixed inputs and seeds: timings are only emitted under --timing.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bench import BenchConsistencyError, pick_auto_engine, records_to_csv, run_bench
from .engines import (
    count_ak_subtrees,
    count_nd_positions,
    count_nk_subtrees,
    count_subset_positions,
    count_vc_positions,
    grundy_naive,
    grundy_tree,
    solve_naive,
    solve_nd,
    solve_subset,
    solve_tree,
    solve_vc,
)
from .generators import (
    gen_caterpillar_kayles,
    gen_grid,
    gen_lower_nd,
    gen_lower_vc,
    gen_random,
)
from .graph import ParseError, Player, parse_graph, serialize_graph
from .params import equivalence_classes, min_vertex_cover, nd_partition


def _read_graph(path: str):
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _emit(obj, out: Optional[str] = None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stats_json(stats, timing: bool) -> dict:
    out = {
        "node_expansions": stats.node_expansions,
        "memo_hits": stats.memo_hits,
        "distinct_keys": stats.distinct_keys,
    }
    if timing:
        out["elapsed"] = round(stats.elapsed, 6)
    return out


def _parse_cover(text: str) -> list[int]:
    try:
        ids = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad cover list {text!r} (expected comma-separated 1-based ids)")
    return [v - 1 for v in ids]


def _load_partition(path: str) -> list[list[int]]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not all(isinstance(m, list) for m in data):
        raise ValueError("partition file must be a JSON list of vertex-id lists")
    return [[v - 1 for v in module] for module in data]


def _cmd_solve(args) -> int:
    g = _read_graph(args.file)
    turn = Player.parse(args.first)
    engine = args.engine
    if engine == "auto":
        engine = pick_auto_engine(g, args.vc_threshold)
    cover = _parse_cover(args.cover) if args.cover else None
    partition = _load_partition(args.partition) if args.partition else None
    if args.count_mode:
        if engine == "subset":
            stats = count_subset_positions(g, turn, args.max_n)
        elif engine == "vc":
            stats = count_vc_positions(g, turn, cover)
        elif engine == "nd":
            stats = count_nd_positions(g, turn, partition)
        else:
            raise ValueError(f"count mode is not supported for engine {engine!r}")
        _emit({"engine": engine, "first": turn.value, "stats": _stats_json(stats, args.timing)})
        return 0
    if engine == "naive":
        outcome = solve_naive(g, turn)
    elif engine == "subset":
        outcome = solve_subset(g, turn, args.max_n)
    elif engine == "vc":
        outcome = solve_vc(g, turn, cover)
    elif engine == "nd":
        outcome = solve_nd(g, turn, partition)
    elif engine == "tree":
        outcome = solve_tree(g, turn)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    move = outcome.winning_move
    _emit(
        {
            "engine": engine,
            "first": turn.value,
            "winner": outcome.winner.value,
            "winning_move": [move[0] + 1, move[1] + 1] if move else None,
            "stats": _stats_json(outcome.stats, args.timing),
        }
    )
    return 0


def _cmd_grundy(args) -> int:
    g = _read_graph(args.file)
    if args.engine == "naive":
        value = grundy_naive(g)
    else:
        value = grundy_tree(g)
    _emit({"engine": args.engine, "grundy": value})
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "grid":
        g = gen_grid(args.rows, args.cols, args.variant)
        header = f"c grid rows={args.rows} cols={args.cols} variant={args.variant}"
    elif args.kind == "caterpillar":
        g = gen_caterpillar_kayles(args.pins)
        header = f"c caterpillar pins={args.pins}"
    elif args.kind == "lower-vc":
        g = gen_lower_vc(args.k)
        header = f"c lower-vc k={args.k}"
    elif args.kind == "lower-nd":
        g = gen_lower_nd(args.k, args.s)
        header = f"c lower-nd k={args.k} s={args.s}"
    else:
        weights = tuple(int(x) for x in args.weights.split(","))
        if len(weights) != 3:
            raise ValueError("weights must be three comma-separated integers")
        g = gen_random(args.n, args.p, weights, args.seed)
        header = (
            f"c random n={args.n} p={args.p}"
            f" weights={args.weights} seed={args.seed}"
        )
    text = header + "\n" + serialize_graph(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_params(args) -> int:
    g = _read_graph(args.file)
    cover = min_vertex_cover(g)
    partition = nd_partition(g)
    classes = equivalence_classes(g, cover=cover.vertices)
    _emit(
        {
            "n": g.n,
            "m": g.m,
            "colors": sorted(c.letter for c in g.colors_present()),
            "tau": cover.size,
            "cover": sorted(v + 1 for v in cover.vertices),
            "nu": partition.count,
            "module_sizes": sorted((len(m) for m in partition.modules), reverse=True),
            "equivalence_classes": len(classes.classes),
            "class_sizes": sorted((len(m) for m in classes.classes.values()), reverse=True),
        }
    )
    return 0


def _cmd_count(args) -> int:
    g = _read_graph(args.file)
    root = args.root - 1
    if args.kind == "ak-subtrees":
        value = count_ak_subtrees(g, root)
    else:
        value = count_nk_subtrees(g, root)
    _emit({"kind": args.kind, "root": args.root, "count": value})
    return 0


def _cmd_bench(args) -> int:
    with open(args.suite) as fh:
        spec = json.load(fh)
    records = run_bench(spec, timing=args.timing)
    text = records_to_csv(records)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cak",
        description="Solve and instrument Colored Arc Kayles positions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="determine the winner of a position")
    p.add_argument("-f", "--file", required=True, help=".cak input file")
    p.add_argument("--first", default="B", choices=["B", "W"], help="player to move")
    p.add_argument(
        "-e",
        "--engine",
        default="auto",
        choices=["naive", "subset", "vc", "nd", "tree", "auto"],
    )
    p.add_argument("--max-n", type=int, default=32, help="subset engine capacity")
    p.add_argument("--cover", help="comma-separated 1-based cover for the vc engine")
    p.add_argument("--partition", help="JSON file of 1-based modules for the nd engine")
    p.add_argument(
        "--count-mode",
        action="store_true",
        help="full-expansion instrumentation (no short-circuit; subset/vc/nd)",
    )
    p.add_argument("--vc-threshold", type=int, default=8, help="auto: use vc when tau <= this")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("grundy", help="Sprague-Grundy value of a gray position")
    p.add_argument("-f", "--file", required=True)
    p.add_argument("-e", "--engine", default="tree", choices=["naive", "tree"])
    p.set_defaults(func=_cmd_grundy)

    p = sub.add_parser("gen", help="write a generated instance as .cak")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    q = gen_sub.add_parser("grid")
    q.add_argument("--rows", type=int, required=True)
    q.add_argument("--cols", type=int, required=True)
    q.add_argument("--variant", default="cram", choices=["cram", "domineering"])
    q = gen_sub.add_parser("caterpillar")
    q.add_argument("--pins", type=int, required=True)
    q = gen_sub.add_parser("lower-vc")
    q.add_argument("--k", type=int, required=True)
    q = gen_sub.add_parser("lower-nd")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q = gen_sub.add_parser("random")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q.add_argument("--weights", default="1,1,1", help="gray,black,white integer weights")
    q.add_argument("--seed", type=int, default=0)
    for q in gen_sub.choices.values():
        q.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("params", help="structural parameters of an instance")
    p.add_argument("-f", "--file", required=True)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("count", help="count rooted subtrees reachable by removals")
    p.add_argument("kind", choices=["ak-subtrees", "nk-subtrees"])
    p.add_argument("-f", "--file", required=True)
    p.add_argument("--root", type=int, required=True, help="1-based root vertex")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bench", help="run a benchmark suite, emit CSV")
    p.add_argument("--suite", required=True, help="suite spec JSON file")
    p.add_argument("-o", "--output")
    p.add_argument("--timing", action="store_true", help="fill the elapsed column")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BenchConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
