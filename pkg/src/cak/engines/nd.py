"""Module-keyed engine: search over per-module survivor counts.

Partition the vertices into modules of pairwise (colored) twins. Twins
are interchangeable by an automorphism, so a position is determined up
to isomorphism by how many vertices of each module survive, and the
memo key is just that tuple of counts plus the turn. The key space has
size at most 2 * prod(|M_i| + 1).

Between two modules adjacency is uniform (every pair or no pair, one
color), and inside a module likewise, so one candidate edge per module
pair (taken between smallest alive members) covers every playable edge
up to child-key equality.
"""

from __future__ import annotations

from time import perf_counter
from typing import Iterable, Optional

from ..graph import ColoredGraph, Player
from ..params import ModulePartition, _colored_twins, nd_partition
from .common import Outcome, SearchStats

NdKey = tuple[tuple[int, ...], Player]


def _resolve_partition(g: ColoredGraph, partition) -> tuple[tuple[int, ...], ...]:
    if partition is None:
        return nd_partition(g).modules
    if isinstance(partition, ModulePartition):
        modules = partition.modules
    else:
        modules = tuple(tuple(sorted(m)) for m in partition)
    seen: set[int] = set()
    for module in modules:
        if not module:
            raise ValueError("invalid partition: empty module")
        for v in module:
            if not (0 <= v < g.n) or not g.alive >> v & 1:
                raise ValueError(f"invalid partition: vertex {v} not alive in the graph")
            if v in seen:
                raise ValueError(f"invalid partition: vertex {v} appears twice")
            seen.add(v)
        for i, u in enumerate(module):
            for v in module[i + 1 :]:
                if not _colored_twins(g, u, v, ignore_colors=False):
                    raise ValueError(
                        f"invalid partition: {u} and {v} are not colored twins"
                    )
    if seen != set(g.alive_vertices()):
        raise ValueError("invalid partition: modules must cover every alive vertex")
    return tuple(sorted(modules))


class _ModuleSearch:
    def __init__(self, g: ColoredGraph, partition):
        self.modules = _resolve_partition(g, partition)
        nu = len(self.modules)
        # Uniform colors: between module pair (one or no color), and inside.
        self.inter = [[None] * nu for _ in range(nu)]
        for i in range(nu):
            for j in range(i + 1, nu):
                c = g.color_of(self.modules[i][0], self.modules[j][0])
                self.inter[i][j] = self.inter[j][i] = c
        self.internal = [
            g.color_of(m[0], m[1]) if len(m) > 1 else None for m in self.modules
        ]
        self.allowed_pairs = None  # None = all

    def restrict(self, vertices: Iterable[int]) -> None:
        """Only allow moves with both endpoints in `vertices`, which must
        be a union of modules (so candidate edges stay representative)."""
        vset = set(vertices)
        inside = []
        for idx, module in enumerate(self.modules):
            hit = sum(1 for v in module if v in vset)
            if hit == len(module):
                inside.append(idx)
            elif hit:
                raise ValueError("restriction set must be a union of modules")
        self.allowed_pairs = set(inside)

    def counts(self, mask: int) -> tuple[int, ...]:
        return tuple(
            sum(1 for v in module if mask >> v & 1) for module in self.modules
        )

    def candidates(self, mask: int, counts, player: Player) -> list[tuple[int, int]]:
        moves = []
        nu = len(self.modules)
        for i in range(nu):
            if counts[i] == 0:
                continue
            if self.allowed_pairs is not None and i not in self.allowed_pairs:
                continue
            alive_i = [v for v in self.modules[i] if mask >> v & 1]
            c = self.internal[i]
            if counts[i] >= 2 and c is not None and player.can_play(c):
                moves.append((alive_i[0], alive_i[1]))
            for j in range(i + 1, nu):
                if counts[j] == 0:
                    continue
                if self.allowed_pairs is not None and j not in self.allowed_pairs:
                    continue
                c = self.inter[i][j]
                if c is not None and player.can_play(c):
                    u = alive_i[0]
                    v = next(w for w in self.modules[j] if mask >> w & 1)
                    moves.append((min(u, v), max(u, v)))
        moves.sort()
        return moves


def _run(
    g: ColoredGraph,
    turn: Player,
    partition,
    short_circuit: bool,
    restrict_to: Optional[Iterable[int]] = None,
) -> Outcome:
    t0 = perf_counter()
    search = _ModuleSearch(g, partition)
    if restrict_to is not None:
        search.restrict(restrict_to)
    memo: dict[NdKey, bool] = {}
    stats = SearchStats()

    def wins(mask: int, player: Player) -> bool:
        stats.node_expansions += 1
        counts = search.counts(mask)
        key = (counts, player)
        cached = memo.get(key)
        if cached is not None:
            stats.memo_hits += 1
            return cached
        result = False
        opp = player.opponent
        for u, v in search.candidates(mask, counts, player):
            if not wins(mask & ~(1 << u | 1 << v), opp):
                result = True
                if short_circuit:
                    break
        memo[key] = result
        return result

    mask0 = g.alive
    stats.node_expansions += 1
    counts0 = search.counts(mask0)
    move = None
    opp = turn.opponent
    for u, v in search.candidates(mask0, counts0, turn):
        if not wins(mask0 & ~(1 << u | 1 << v), opp) and move is None:
            move = (u, v)
            if short_circuit:
                break
    memo[(counts0, turn)] = move is not None
    stats.distinct_keys = len(memo)
    stats.elapsed = perf_counter() - t0
    winner = turn if move is not None else opp
    return Outcome(winner, move, stats)


def solve_nd(g: ColoredGraph, turn: Player, partition=None) -> Outcome:
    """Solve with a supplied module partition (validated: pairwise
    colored twins covering the alive vertices) or the computed coarsest
    one."""
    return _run(g, turn, partition, short_circuit=True)


def count_nd_positions(
    g: ColoredGraph,
    turn: Player,
    partition=None,
    restrict_to: Optional[Iterable[int]] = None,
) -> SearchStats:
    """Full-expansion instrumentation; optionally restrict moves to edges
    inside a vertex set (a union of modules), as in the clique-family
    state-space experiment."""
    return _run(g, turn, partition, short_circuit=False, restrict_to=restrict_to).stats
