"""Cover-keyed engine: search parameterized by a vertex cover S.

Fix a vertex cover S of the start graph (it stays fixed for the whole
search; every move kills at least one cover vertex, so recursion depth
is at most |S|). Two positions are merged when the surviving cover
vertices match and the non-cover vertices, grouped by their vector of
edge colors toward the surviving cover, match as a multiset of
(vector, count) pairs. Merged positions are isomorphic via any
class-preserving bijection, so they share a game value.

Moves are restricted to cover-internal edges plus, per class, the edges
of the class representative (smallest alive member): any playable edge
into a class produces a child with the same key as the representative's
edge, so nothing is lost.

Normalization: cover vertices that are isolated in the current position
are dropped from the key, and so are non-cover vertices with an
all-absent vector (both have no moves left and cannot influence play).
"""

from __future__ import annotations

from time import perf_counter
from typing import Iterable, Optional

from ..graph import Color, ColoredGraph, Player
from ..params import as_cover, min_vertex_cover
from .common import Outcome, SearchStats

VcKey = tuple[tuple[int, ...], tuple[tuple[tuple[int, ...], int], ...], Player]


class _CoverSearch:
    def __init__(self, g: ColoredGraph, cover: Optional[Iterable[int]]):
        if cover is None:
            cover_set = min_vertex_cover(g).vertices
        else:
            cover_set = as_cover(g, cover)
        self.cover = tuple(sorted(cover_set))
        self.noncover = tuple(v for v in range(g.n) if v not in cover_set)
        self.nbr = g.neighbor_masks()
        self.color_of = g.color_of
        self.internal = tuple(
            (u, v, c) for u, v, c in g.edges if u in cover_set and v in cover_set
        )

    def layout(self, mask: int):
        """(surviving cover, class -> sorted members) for a position."""
        alive_cover = tuple(
            s for s in self.cover if mask >> s & 1 and self.nbr[s] & mask
        )
        classes: dict[tuple[int, ...], list[int]] = {}
        for v in self.noncover:
            if not mask >> v & 1:
                continue
            vector = tuple(
                0 if (c := self.color_of(v, u)) is None else int(c)
                for u in alive_cover
            )
            if any(vector):
                classes.setdefault(vector, []).append(v)
        return alive_cover, classes

    def key(self, mask: int, player: Player) -> VcKey:
        alive_cover, classes = self.layout(mask)
        counts = tuple(sorted((vec, len(members)) for vec, members in classes.items()))
        return (alive_cover, counts, player)

    def candidates(self, mask: int, player: Player) -> list[tuple[int, int]]:
        alive_cover, classes = self.layout(mask)
        moves = set()
        for u, v, c in self.internal:
            if mask >> u & 1 and mask >> v & 1 and player.can_play(c):
                moves.add((u, v))
        for vector, members in classes.items():
            rep = members[0]
            for u, code in zip(alive_cover, vector):
                if code and player.can_play(Color(code)):
                    moves.add((min(u, rep), max(u, rep)))
        return sorted(moves)


def vc_canonical_key(
    g: ColoredGraph, alive: Optional[int], cover: Iterable[int], turn: Player
) -> VcKey:
    """Memo key of a position for a fixed cover (exposed for testing)."""
    mask = g.alive if alive is None else alive
    if mask & ~g.alive:
        raise ValueError("alive mask keeps a dead vertex")
    return _CoverSearch(g, cover).key(mask, turn)


def _run(
    g: ColoredGraph, turn: Player, cover: Optional[Iterable[int]], short_circuit: bool
) -> Outcome:
    t0 = perf_counter()
    search = _CoverSearch(g, cover)
    memo: dict[VcKey, bool] = {}
    stats = SearchStats()

    def wins(mask: int, player: Player) -> bool:
        stats.node_expansions += 1
        key = search.key(mask, player)
        cached = memo.get(key)
        if cached is not None:
            stats.memo_hits += 1
            return cached
        result = False
        opp = player.opponent
        for u, v in search.candidates(mask, player):
            if not wins(mask & ~(1 << u | 1 << v), opp):
                result = True
                if short_circuit:
                    break
        memo[key] = result
        return result

    mask0 = g.alive
    stats.node_expansions += 1
    move = None
    opp = turn.opponent
    for u, v in search.candidates(mask0, turn):
        if not wins(mask0 & ~(1 << u | 1 << v), opp) and move is None:
            move = (u, v)
            if short_circuit:
                break
    memo[search.key(mask0, turn)] = move is not None
    stats.distinct_keys = len(memo)
    stats.elapsed = perf_counter() - t0
    winner = turn if move is not None else opp
    return Outcome(winner, move, stats)


def solve_vc(
    g: ColoredGraph, turn: Player, cover: Optional[Iterable[int]] = None
) -> Outcome:
    """Solve with a supplied cover, or a freshly computed minimum one."""
    return _run(g, turn, cover, short_circuit=True)


def count_vc_positions(
    g: ColoredGraph, turn: Player, cover: Optional[Iterable[int]] = None
) -> SearchStats:
    """Full-expansion instrumentation: the OR over children is evaluated
    without short-circuiting, so node_expansions counts the entire
    memoized recursion tree."""
    return _run(g, turn, cover, short_circuit=False).stats
