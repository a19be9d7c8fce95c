"""Subset engine: memoized search keyed by (alive bitmask, turn).

Every reachable position is an induced subgraph of the start graph, so
one dict over vertex-subset bitmasks caches the whole game. Keys are
deliberately canonicalization-free: this engine is the semantic
baseline the cover- and module-keyed engines are measured against, so
it must not merge isomorphic positions.
"""

from __future__ import annotations

from time import perf_counter

from ..graph import ColoredGraph, Player
from .common import CapacityError, Outcome, SearchStats

DEFAULT_MAX_N = 32


def _playable(g: ColoredGraph, player: Player):
    return tuple((u, v, 1 << u | 1 << v) for u, v, c in g.edges if player.can_play(c))


def solve_subset(g: ColoredGraph, turn: Player, max_n: int = DEFAULT_MAX_N) -> Outcome:
    if g.n > max_n:
        raise CapacityError(
            f"subset engine keys {max_n}-bit masks; instance has n={g.n}"
            " (raise max_n explicitly if you mean it)"
        )
    t0 = perf_counter()
    edges = {p: _playable(g, p) for p in Player}
    memo: dict[tuple[int, Player], bool] = {}
    stats = SearchStats()

    def wins(mask: int, player: Player) -> bool:
        stats.node_expansions += 1
        key = (mask, player)
        cached = memo.get(key)
        if cached is not None:
            stats.memo_hits += 1
            return cached
        result = False
        opp = player.opponent
        for _, _, em in edges[player]:
            if mask & em == em and not wins(mask & ~em, opp):
                result = True
                break
        memo[key] = result
        return result

    mask0 = g.alive
    stats.node_expansions += 1
    move = None
    opp = turn.opponent
    for u, v, em in edges[turn]:
        if mask0 & em == em and not wins(mask0 & ~em, opp):
            move = (u, v)
            break
    memo[(mask0, turn)] = move is not None
    stats.distinct_keys = len(memo)
    stats.elapsed = perf_counter() - t0
    winner = turn if move is not None else opp
    return Outcome(winner, move, stats)


def count_subset_positions(g: ColoredGraph, turn: Player, max_n: int = DEFAULT_MAX_N) -> SearchStats:
    """Run solve_subset for its instrumentation only."""
    return solve_subset(g, turn, max_n).stats
