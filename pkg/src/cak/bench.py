"""Benchmark harness: expand a suite spec, run engines, emit CSV.

A suite spec is JSON:

    {
      "seed": 42,
      "turn": "B",
      "engines": ["naive", "subset", "vc", "nd"],
      "suites": [
        {"generator": "random",
         "grid": {"n": [6, 8], "p": [0.2, 0.5], "weights": [[1, 1, 1]]},
         "repetitions": 3},
        {"generator": "grid", "grid": {"rows": [2], "cols": [2, 3],
                                       "variant": ["cram"]}},
        {"generator": "caterpillar", "grid": {"pins": [2, 3]},
         "engines": ["tree", "subset"]},
        {"generator": "lower-vc", "grid": {"k": [2]},
         "engines": ["vc"], "count_mode": true},
        {"generator": "lower-nd", "grid": {"k": [3], "s": [2]},
         "engines": ["nd"], "count_mode": true,
         "restrict_clique_edges": true}
      ]
    }

Each suite entry takes the cartesian product of its grid lists (keys in
sorted order). Random instances draw sequential seeds seed, seed+1, ...
in expansion order; "repetitions" repeats each random parameter combo.
Per-entry "engines", "turn", "count_mode" override the top level.

Rows are sorted by instance id then engine, and the winners of all
successful solve rows for one instance must agree; a disagreement
aborts the run with diagnostics. Engine errors (wrong instance shape,
capacity) land in the row's status column instead of aborting.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from itertools import product
from typing import Optional

from .engines import (
    count_nd_positions,
    count_subset_positions,
    count_vc_positions,
    solve_naive,
    solve_nd,
    solve_subset,
    solve_tree,
    solve_vc,
)
from .engines.tree import _check_gray_forest
from .generators import (
    gen_caterpillar_kayles,
    gen_grid,
    gen_lower_nd,
    gen_lower_vc,
    gen_random,
    lower_nd_clique_vertices,
)
from .graph import ColoredGraph, Player
from .params import min_vertex_cover, nd_partition

ENGINE_NAMES = ("naive", "subset", "vc", "nd", "tree", "auto")

_SOLVERS = {
    "naive": solve_naive,
    "subset": solve_subset,
    "vc": solve_vc,
    "nd": solve_nd,
    "tree": solve_tree,
}

_COUNTERS = {
    "subset": count_subset_positions,
    "vc": count_vc_positions,
    "nd": count_nd_positions,
}


class BenchConsistencyError(RuntimeError):
    """Engines disagreed about a winner."""


def pick_auto_engine(g: ColoredGraph, vc_threshold: int = 8) -> str:
    """tree for gray forests, vc for small covers, subset otherwise."""
    try:
        _check_gray_forest(g, g.alive)
    except ValueError:
        pass
    else:
        return "tree"
    if min_vertex_cover(g).size <= vc_threshold:
        return "vc"
    return "subset"


@dataclass
class BenchRecord:
    instance: str
    generator_params: str
    engine: str
    n: int
    m: int
    tau: int
    nu: int
    winner: str
    node_expansions: int
    distinct_keys: int
    elapsed: str
    status: str


CSV_COLUMNS = tuple(f.name for f in fields(BenchRecord))


@dataclass
class _Task:
    instance: str
    params: str
    graph: ColoredGraph
    turn: Player
    engines: tuple[str, ...]
    count_mode: bool
    restrict_to: Optional[frozenset[int]]


def _fmt_value(v) -> str:
    if isinstance(v, (list, tuple)):
        return ":".join(str(x) for x in v)
    return str(v)


_GENERATORS = {
    "grid": (gen_grid, ("rows", "cols", "variant")),
    "caterpillar": (gen_caterpillar_kayles, ("pins",)),
    "lower-vc": (gen_lower_vc, ("k",)),
    "lower-nd": (gen_lower_nd, ("k", "s")),
    "random": (gen_random, ("n", "p", "weights", "seed")),
}


def expand_suite(spec: dict) -> list[_Task]:
    base_turn = Player.parse(spec.get("turn", "B"))
    base_engines = tuple(spec.get("engines", ("subset",)))
    seed_counter = int(spec.get("seed", 0))
    tasks: list[_Task] = []
    for entry in spec.get("suites", ()):
        name = entry["generator"]
        if name not in _GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        fn, param_names = _GENERATORS[name]
        grid = entry.get("grid", {})
        for key in grid:
            if key not in param_names or key == "seed":
                raise ValueError(f"generator {name!r} does not take parameter {key!r}")
        turn = Player.parse(entry.get("turn", base_turn.value))
        engines = tuple(entry.get("engines", base_engines))
        for eng in engines:
            if eng not in ENGINE_NAMES:
                raise ValueError(f"unknown engine {eng!r}")
        count_mode = bool(entry.get("count_mode", False))
        restrict = bool(entry.get("restrict_clique_edges", False))
        if restrict and name != "lower-nd":
            raise ValueError("restrict_clique_edges only applies to lower-nd")
        keys = sorted(grid)
        combos = [dict(zip(keys, values)) for values in product(*(grid[k] for k in keys))]
        repetitions = int(entry.get("repetitions", 1)) if name == "random" else 1
        for combo in combos:
            for _ in range(repetitions):
                params = dict(combo)
                if name == "random":
                    params.setdefault("weights", (1, 1, 1))
                    params["seed"] = seed_counter
                    seed_counter += 1
                if isinstance(params.get("weights"), list):
                    params["weights"] = tuple(params["weights"])
                graph = fn(**params)
                param_str = ",".join(f"{k}={_fmt_value(params[k])}" for k in sorted(params))
                restrict_to = (
                    lower_nd_clique_vertices(params["k"], params["s"]) if restrict else None
                )
                tasks.append(
                    _Task(
                        instance=f"{name}[{param_str}]",
                        params=param_str,
                        graph=graph,
                        turn=turn,
                        engines=engines,
                        count_mode=count_mode,
                        restrict_to=restrict_to,
                    )
                )
    return tasks


def _run_engine(task: _Task, engine: str):
    """Returns (winner string or '', stats)."""
    g, turn = task.graph, task.turn
    if engine == "auto":
        engine = pick_auto_engine(g)
    if task.count_mode:
        if engine not in _COUNTERS:
            raise ValueError(f"count mode is not supported for engine {engine!r}")
        if engine == "nd":
            stats = count_nd_positions(g, turn, restrict_to=task.restrict_to)
        else:
            stats = _COUNTERS[engine](g, turn)
        return "", stats
    outcome = _SOLVERS[engine](g, turn)
    return outcome.winner.value, outcome.stats


def run_bench(spec: dict, timing: bool = False) -> list[BenchRecord]:
    records: list[BenchRecord] = []
    winners: dict[str, dict[str, str]] = {}
    for task in expand_suite(spec):
        g = task.graph
        tau = min_vertex_cover(g).size
        nu = nd_partition(g).count
        for engine in task.engines:
            winner, stats, status = "", None, "ok"
            try:
                winner, stats = _run_engine(task, engine)
            except ValueError as exc:
                status = f"error: {exc}"
            records.append(
                BenchRecord(
                    instance=task.instance,
                    generator_params=task.params,
                    engine=engine,
                    n=g.n,
                    m=g.m,
                    tau=tau,
                    nu=nu,
                    winner=winner,
                    node_expansions=stats.node_expansions if stats else 0,
                    distinct_keys=stats.distinct_keys if stats else 0,
                    elapsed=f"{stats.elapsed:.6f}" if (stats and timing) else "",
                    status=status,
                )
            )
            if winner:
                winners.setdefault(task.instance, {})[engine] = winner
    for instance, by_engine in winners.items():
        if len(set(by_engine.values())) > 1:
            detail = ", ".join(f"{e}->{w}" for e, w in sorted(by_engine.items()))
            raise BenchConsistencyError(
                f"winner disagreement on {instance}: {detail}"
            )
    records.sort(key=lambda r: (r.instance, r.engine))
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([getattr(rec, col) for col in CSV_COLUMNS])
    return buf.getvalue()
