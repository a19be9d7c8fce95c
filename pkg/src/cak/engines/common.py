"""Shared engine types: outcomes, search statistics, small helpers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..graph import ColoredGraph, Player


class CapacityError(ValueError):
    """Instance exceeds an engine's representable size."""


@dataclass
class SearchStats:
    """Instrumentation counters.

    node_expansions counts recursion-tree nodes visited: every evaluation
    of a position, where an answer served from the memo table is a leaf
    visit. memo_hits counts those leaf visits; distinct_keys is the final
    memo size. This matches recursion-tree accounting: with short-circuit
    disabled, node_expansions is the number of recursive calls made.
    """

    node_expansions: int = 0
    memo_hits: int = 0
    distinct_keys: int = 0
    elapsed: float = 0.0


@dataclass
class Outcome:
    """winner is B or W; winning_move is present exactly when the mover
    wins and is then a playable edge whose child position loses for the
    opponent (the lexicographically smallest such edge)."""

    winner: Player
    winning_move: Optional[tuple[int, int]]
    stats: SearchStats


def mex(values) -> int:
    """Minimum excluded nonnegative integer."""
    seen = set(values)
    k = 0
    while k in seen:
        k += 1
    return k


def resolve_alive(g: ColoredGraph, alive: Optional[int]) -> int:
    if alive is None:
        return g.alive
    if not isinstance(alive, int) or alive < 0 or alive & ~g.alive:
        raise ValueError("alive mask must be a subset of the graph's live vertices")
    return alive


def split_components(mask: int, nbr: list[int]) -> list[int]:
    """Connected components with at least one edge, as bitmasks.

    Vertices isolated within mask are skipped: they carry no moves and
    have game value zero.
    """
    comps = []
    rest = mask
    while rest:
        bit = rest & -rest
        v = bit.bit_length() - 1
        if not nbr[v] & mask:
            rest ^= bit
            continue
        comp = bit
        frontier = bit
        while frontier:
            fb = frontier & -frontier
            frontier ^= fb
            grow = nbr[fb.bit_length() - 1] & mask & ~comp
            comp |= grow
            frontier |= grow
        comps.append(comp)
        rest &= ~comp
    return comps
