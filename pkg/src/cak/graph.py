"""Colored-graph model and the .cak file format.

A board is an undirected graph whose edges are gray, black, or white.
Player B may play gray and black edges, player W gray and white ones.
Playing an edge removes both of its endpoints together with every
incident edge; a player who cannot play loses.

Vertices are dense 0-based ids. Dead vertices are tracked with an alive
bitmask over the original vertex universe instead of reindexing, so all
positions of one game share vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterable, Optional, Sequence, Union


class Color(IntEnum):
    """Edge color.

    Integer values give the canonical order used by class vectors:
    absent (0) < GRAY < BLACK < WHITE.
    """

    GRAY = 1
    BLACK = 2
    WHITE = 3

    @property
    def letter(self) -> str:
        return _LETTER_BY_COLOR[self]

    @classmethod
    def from_letter(cls, letter: str) -> "Color":
        try:
            return _COLOR_BY_LETTER[letter]
        except KeyError:
            raise ValueError(f"unknown color letter {letter!r}") from None


_LETTER_BY_COLOR = {Color.GRAY: "g", Color.BLACK: "b", Color.WHITE: "w"}
_COLOR_BY_LETTER = {"g": Color.GRAY, "b": Color.BLACK, "w": Color.WHITE}


class Player(Enum):
    B = "B"
    W = "W"

    @property
    def opponent(self) -> "Player":
        return Player.W if self is Player.B else Player.B

    def can_play(self, color: Color) -> bool:
        """Gray is shared; black belongs to B, white to W."""
        if color is Color.GRAY:
            return True
        return color is (Color.BLACK if self is Player.B else Color.WHITE)

    @classmethod
    def parse(cls, text: str) -> "Player":
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown player {text!r} (expected B or W)") from None


class ParseError(ValueError):
    """Raised on malformed .cak input; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


Edge = tuple[int, int, Color]


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable colored graph plus an alive-vertex bitmask.

    Edges are stored as (u, v, color) with u < v, sorted, and every
    endpoint of a stored edge must be alive.
    """

    n: int
    edges: tuple[Edge, ...]
    alive: Optional[int] = None
    _color: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative int, got {self.n!r}")
        full = (1 << self.n) - 1
        alive = self.alive
        if alive is None:
            alive = full
        if not isinstance(alive, int) or alive < 0 or alive & ~full:
            raise ValueError("alive mask out of range for vertex universe")
        colors: dict[tuple[int, int], Color] = {}
        normalized = []
        for edge in self.edges:
            u, v, c = edge
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge endpoint out of range: {edge!r}")
            if u == v:
                raise ValueError(f"self-loop not allowed: {edge!r}")
            if u > v:
                u, v = v, u
            if (u, v) in colors:
                raise ValueError(f"duplicate edge {{{u}, {v}}}")
            if not alive >> u & 1 or not alive >> v & 1:
                raise ValueError(f"edge {{{u}, {v}}} has a dead endpoint")
            c = Color(c)
            colors[(u, v)] = c
            normalized.append((u, v, c))
        normalized.sort()
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "alive", alive)
        object.__setattr__(self, "_color", colors)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def alive_count(self) -> int:
        return bin(self.alive).count("1")

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.alive >> v & 1]

    def color_of(self, u: int, v: int) -> Optional[Color]:
        """Color of edge {u, v}, or None when the pair is not adjacent."""
        if u > v:
            u, v = v, u
        return self._color.get((u, v))

    def adjacency(self) -> dict[int, dict[int, Color]]:
        """Fresh adjacency map over the stored (alive) edges."""
        adj: dict[int, dict[int, Color]] = {v: {} for v in range(self.n)}
        for u, v, c in self.edges:
            adj[u][v] = c
            adj[v][u] = c
        return adj

    def neighbor_masks(self) -> list[int]:
        nbr = [0] * self.n
        for u, v, _ in self.edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return nbr

    def colors_present(self) -> set[Color]:
        return {c for _, _, c in self.edges}

    def is_all_gray(self) -> bool:
        return all(c is Color.GRAY for _, _, c in self.edges)

    def playable_edges(self, player: Player) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if player.can_play(e[2]))


def parse_graph(text: Union[str, bytes]) -> ColoredGraph:
    """Parse the .cak format.

    Format, one record per LF-terminated ASCII line:
        c <free text>          -- optional comments
        p cak <n> <m>          -- exactly one header, before all edges
        e <u> <v> <color>      -- m lines, 1-based endpoints, color g|b|w

    Raises ParseError (with line number) on malformed input, duplicate
    edges, self-loops, out-of-range vertex ids, or unknown colors.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not ASCII: {exc}") from None
    n = None
    declared_m = 0
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise ParseError("second header line", lineno)
            if len(fields) != 4 or fields[1] != "cak":
                raise ParseError(f"bad header {raw!r} (expected 'p cak <n> <m>')", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"non-integer counts in header {raw!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in header", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(fields) != 4:
                raise ParseError(f"bad edge line {raw!r} (expected 'e <u> <v> <color>')", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {raw!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n} in {raw!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop in {raw!r}", lineno)
            try:
                color = Color.from_letter(fields[3])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            u, v = u - 1, v - 1
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ParseError(f"duplicate edge {{{u + 1}, {v + 1}}}", lineno)
            seen.add((u, v))
            edges.append((u, v, color))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p cak' header")
    if len(edges) != declared_m:
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    return ColoredGraph(n, tuple(edges))


def serialize_graph(g: ColoredGraph) -> str:
    """Inverse of parse_graph, edges emitted sorted, 1-based, LF lines.

    The format carries no aliveness, so only fully-alive graphs round-trip
    exactly; serializing a position keeps its universe and live edges.
    """
    lines = [f"p cak {g.n} {g.m}"]
    for u, v, c in g.edges:
        lines.append(f"e {u + 1} {v + 1} {c.letter}")
    return "\n".join(lines) + "\n"


def remove_closed_edge(g: ColoredGraph, edge: tuple[int, int]) -> ColoredGraph:
    """Play edge {u, v}: both endpoints die, incident edges vanish.

    Returns a graph over the same vertex universe with u and v marked
    dead; no other change.
    """
    u, v = edge
    if u > v:
        u, v = v, u
    if g.color_of(u, v) is None:
        raise ValueError(f"edge {{{u}, {v}}} not present")
    kept = tuple(e for e in g.edges if u not in e[:2] and v not in e[:2])
    return ColoredGraph(g.n, kept, g.alive & ~(1 << u | 1 << v))


def permute(g: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """Relabel vertices: vertex v becomes perm[v]. perm must be a bijection."""
    if len(perm) != g.n or sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a bijection over range(n)")
    edges = tuple((perm[u], perm[v], c) for u, v, c in g.edges)
    alive = 0
    for v in range(g.n):
        if g.alive >> v & 1:
            alive |= 1 << perm[v]
    return ColoredGraph(g.n, edges, alive)


def swap_colors(g: ColoredGraph) -> ColoredGraph:
    """Exchange black and white everywhere; gray is fixed.

    Swapping colors and swapping the mover are the same game: B wins
    moving first on g iff W wins moving first on swap_colors(g).
    """
    flip = {Color.GRAY: Color.GRAY, Color.BLACK: Color.WHITE, Color.WHITE: Color.BLACK}
    return ColoredGraph(g.n, tuple((u, v, flip[c]) for u, v, c in g.edges), g.alive)


def induced_mask(g: ColoredGraph, mask: int) -> ColoredGraph:
    """Position of g restricted to the alive vertices in mask."""
    if mask & ~g.alive:
        raise ValueError("mask keeps a vertex that is already dead")
    kept = tuple(e for e in g.edges if mask >> e[0] & 1 and mask >> e[1] & 1)
    return ColoredGraph(g.n, kept, mask)
