"""Reference engine: plain recursion, no memo, no pruning.

The mover wins iff some playable edge leads to a position the opponent
loses. This is the executable definition of the game and the oracle the
cleverer engines are checked against; anything beyond ~14 edges is out
of its league.
"""

from __future__ import annotations

from time import perf_counter
from typing import Optional

from ..graph import Color, ColoredGraph, Player
from .common import Outcome, SearchStats, mex, resolve_alive, split_components


def _playable(g: ColoredGraph, player: Player):
    return tuple((u, v, 1 << u | 1 << v) for u, v, c in g.edges if player.can_play(c))


def solve_naive(g: ColoredGraph, turn: Player, alive: Optional[int] = None) -> Outcome:
    t0 = perf_counter()
    mask0 = resolve_alive(g, alive)
    edges = {p: _playable(g, p) for p in Player}
    stats = SearchStats()

    def wins(mask: int, player: Player) -> bool:
        stats.node_expansions += 1
        opp = player.opponent
        for _, _, em in edges[player]:
            if mask & em == em and not wins(mask & ~em, opp):
                return True
        return False

    stats.node_expansions += 1
    move = None
    opp = turn.opponent
    for u, v, em in edges[turn]:
        if mask0 & em == em and not wins(mask0 & ~em, opp):
            move = (u, v)
            break
    stats.elapsed = perf_counter() - t0
    winner = turn if move is not None else opp
    return Outcome(winner, move, stats)


def grundy_naive(g: ColoredGraph, alive: Optional[int] = None) -> int:
    """Sprague-Grundy value of an all-gray position, by direct recursion.

    Components are independent summands, so the value of a position is
    the XOR of its components' values and a single component's value is
    the mex over its moves. No memoization.
    """
    mask0 = resolve_alive(g, alive)
    for u, v, c in g.edges:
        if mask0 >> u & 1 and mask0 >> v & 1 and c is not Color.GRAY:
            raise ValueError("grundy values need an all-gray (impartial) position")
    nbr = g.neighbor_masks()
    edges = tuple((1 << u | 1 << v) for u, v, _ in g.edges)

    def value(mask: int) -> int:
        comps = split_components(mask, nbr)
        if not comps:
            return 0
        if len(comps) > 1:
            total = 0
            for comp in comps:
                total ^= value(comp)
            return total
        comp = comps[0]
        child_values = set()
        for em in edges:
            if comp & em == em:
                child_values.add(value(comp & ~em))
        return mex(child_values)

    return value(mask0)
