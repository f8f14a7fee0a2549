"""Snakes: chains of chordless cycles, each glued to the previous one along an edge.

A snake is described by its cell lengths and, for every cell after the
first, the edge of the current tail cell it is glued to.  Each cell is kept
as its cyclic vertex order ``[x, y, n1, ..., n_{L-2}]`` where ``(x, y)`` is
the edge it shares with the previous cell (for the head, ``(0, 1)`` plays
that role).  The tail's free edges, in traversal order, are
``(y, n1), (n1, n2), ..., (n_{L-2}, x)``; an attachment is an index into
that list.

For square cells the three free edges of the tail read as a turn relative to
the incoming edge: index 0 turns right (pivoting on ``y``), index 1 goes
straight, index 2 turns left (pivoting on ``x``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import ceil
from typing import Sequence

from .graph import Graph, GraphError, VertexSet, vertex_set

TURNS = {"R": 0, "S": 1, "L": 2}


class SnakeError(GraphError):
    pass


@dataclass(frozen=True)
class SnakeSpec:
    cells: tuple[int, ...]
    attachments: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(int(c) for c in self.cells))
        object.__setattr__(self, "attachments", tuple(int(a) for a in self.attachments))
        if len(self.cells) < 2:
            raise SnakeError("a snake has at least two cells")
        if any(c < 3 for c in self.cells):
            raise SnakeError("cells must have length >= 3")
        if len(self.attachments) != len(self.cells) - 1:
            raise SnakeError("need one attachment per cell after the head")
        for k, a in enumerate(self.attachments):
            if not 0 <= a <= self.cells[k] - 2:
                raise SnakeError(f"attachment {a} invalid for a tail cell of length {self.cells[k]}")

    @classmethod
    def from_turns(cls, cells: Sequence[int], turns: Sequence[str]) -> "SnakeSpec":
        """Square-celled snake from Straight/Left/Right junction turns.

        ``turns`` has one letter per junction after the first (``len(cells) - 2``
        letters); a leading letter for the head junction is also accepted and
        only fixes which edge of the head is used.
        """
        cells = tuple(cells)
        if any(c != 4 for c in cells):
            raise SnakeError("turn encoding applies to square cells only")
        letters = [t.upper() for t in turns]
        if len(letters) == len(cells) - 2:
            letters = ["S"] + letters
        if len(letters) != len(cells) - 1:
            raise SnakeError(f"{len(cells)} cells take {len(cells) - 2} turns")
        try:
            return cls(cells, tuple(TURNS[t] for t in letters))
        except KeyError as exc:
            raise SnakeError(f"unknown turn {exc.args[0]!r}; use S, L or R") from None

    @classmethod
    def straight(cls, length: int, cell: int = 4) -> "SnakeSpec":
        return cls((cell,) * length, (cell // 2 - 1 if cell % 2 == 0 else 1,) * (length - 1))

    @property
    def is_square(self) -> bool:
        return all(c == 4 for c in self.cells)

    @cached_property
    def layout(self) -> "SnakeLayout":
        return _lay_out(self)


@dataclass(frozen=True)
class SnakeLayout:
    vertex_count: int
    cells: tuple[tuple[int, ...], ...]  # cyclic vertex order, shared edge first
    junctions: tuple[tuple[int, int], ...]  # junction j joins cells j and j+1 (0-based)

    @cached_property
    def graph(self) -> Graph:
        edges = set()
        for cell in self.cells:
            for a, b in zip(cell, cell[1:] + cell[:1]):
                edges.add((min(a, b), max(a, b)))
        return Graph(self.vertex_count, tuple(sorted(edges)))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return self.graph.degrees


def _lay_out(spec: SnakeSpec) -> SnakeLayout:
    cells = [tuple(range(spec.cells[0]))]
    junctions = []
    nxt = spec.cells[0]
    for k, a in enumerate(spec.attachments):
        tail = cells[-1]
        length = len(tail)
        u, v = tail[(a + 1) % length], tail[(a + 2) % length]
        fresh = tuple(range(nxt, nxt + spec.cells[k + 1] - 2))
        nxt += len(fresh)
        # the new cell runs the shared edge the other way round
        cells.append((v, u) + fresh)
        junctions.append((v, u))
    return SnakeLayout(nxt, tuple(cells), tuple(junctions))


def build_snake(spec: SnakeSpec) -> Graph:
    return spec.layout.graph


def square_snakes(cells: int):
    """Every square-celled snake with ``cells`` cells, one per turn sequence."""
    for turns in product("SLR", repeat=cells - 2):
        yield SnakeSpec.from_turns((4,) * cells, turns)


def snakes_with_cells(cells: Sequence[int]):
    """Every snake with the given cell lengths, one per choice of attachments."""
    for attachments in product(*(range(c - 1) for c in cells[:-1])):
        yield SnakeSpec(tuple(cells), attachments)


# ---------------------------------------------------------------------------
# name and nickname


MAJOR_PAIR = 3
MINOR_PAIR = 2


def name_features(spec: SnakeSpec) -> list[tuple[float, int, tuple[int, ...]]]:
    """Name entries as ``(position, value, vertices)`` ordered head to tail.

    Positions follow creation order: a major vertex sits at the first junction
    it lies on, a major pair at its junction, and a minor pair in the middle of
    the cell that holds it.
    """
    lay = spec.layout
    deg = lay.degrees
    features = []
    first_junction: dict[int, int] = {}
    for j, (a, b) in enumerate(lay.junctions):
        for v in (a, b):
            first_junction.setdefault(v, j)
        if deg[a] == 3 and deg[b] == 3:
            features.append((float(j), MAJOR_PAIR, tuple(sorted((a, b)))))
    for v, j in first_junction.items():
        if deg[v] >= 4:
            features.append((float(j), deg[v], (v,)))
    pairs = {tuple(sorted(e)) for e in lay.junctions if deg[e[0]] == 3 and deg[e[1]] == 3}
    for c, cell in enumerate(lay.cells):
        fours = [v for v in cell if deg[v] >= 4]
        threes = tuple(sorted(v for v in cell if deg[v] == 3))
        if len(fours) == 2 and len(threes) == 2 and threes not in pairs:
            features.append((c - 0.5, MINOR_PAIR, threes))
    features.sort()
    return features


def name_sequence(spec: SnakeSpec) -> tuple[int, ...]:
    return tuple(value for _, value, _ in name_features(spec))


def rule_nickname(name: Sequence[int]) -> frozenset[int]:
    """Index set from the three inclusion rules alone.

    Entries 2 and 3 are never added, and the last index is always kept.  This
    is exact on names made only of major vertices but undercounts once major
    pairs appear (a straight snake of 8 cells gets 2 instead of 4).
    """
    s = len(name)
    if s == 0:
        return frozenset()
    n = (None,) + tuple(name)  # 1-based
    chosen = {1, s}
    for i in range(1, s - 1):
        nxt = n[i + 1]
        if nxt >= 6:
            take = True
        elif nxt == 5:
            take = i not in chosen
        elif nxt == 4:
            take = (n[i] >= 5 and i not in chosen) or (n[i] == 4 and i not in chosen and i - 1 not in chosen)
        else:
            take = False
        if take:
            chosen.add(i + 1)
    return frozenset(chosen)


def name_spans(name: Sequence[int]) -> list[tuple[int, int] | None]:
    """Junction interval ``(first, last)`` of each name entry, 1-based; None for minor pairs.

    A major pair occupies one junction and a major vertex of degree d occupies
    d - 2 consecutive ones.  Two major vertices in a row share a junction
    unless a minor pair sits between them; every other neighbour starts on the
    next junction.
    """
    spans: list[tuple[int, int] | None] = []
    end = 0
    prev = None
    for x in name:
        if x < MINOR_PAIR:
            raise SnakeError(f"name entries are >= 2, got {x}")
        if x == MINOR_PAIR:
            spans.append(None)
            prev = MINOR_PAIR
            continue
        start = end if prev is not None and prev >= 4 and x >= 4 else end + 1
        end = start + max(x - 3, 0)
        spans.append((start, end))
        prev = x
    return spans


def nickname(name: Sequence[int]) -> frozenset[int]:
    """1-based index set whose size is the decycling number of the named snake.

    Each entry's vertex lies on the cells from its first junction to one past
    its last, and a vertex set decycles a snake exactly when it meets every
    cell.  Walking head to tail, the entry that reaches furthest beyond the
    first uncovered cell is taken.  On names without 2s and 3s this picks the
    same set as :func:`rule_nickname`.
    """
    spans = name_spans(name)
    if not spans:
        return frozenset()
    last_cell = max(sp[1] for sp in spans if sp is not None) + 1
    chosen = []
    cell = 1
    while cell <= last_cell:
        reach = [(sp[1], -k) for k, sp in enumerate(spans) if sp is not None and sp[0] <= cell <= sp[1] + 1]
        if not reach:
            raise SnakeError(f"name leaves cell {cell} uncovered")
        end, k = max(reach)
        chosen.append(1 - k)
        cell = end + 2
    return frozenset(chosen)


def nabla_snake(spec: SnakeSpec) -> int:
    return len(nickname(name_sequence(spec)))


# ---------------------------------------------------------------------------
# greedy decycling


def greedy_decycle(spec: SnakeSpec) -> VertexSet:
    """Decycle from the head: take a highest-degree head vertex, drop every cell it lies on, repeat."""
    lay = spec.layout
    cells = [set(c) for c in lay.cells]
    chosen = []
    head = 0
    while head < len(cells):
        degree = _remaining_degrees(lay, head)
        v = min(lay.cells[head], key=lambda x: (-degree[x], x))
        chosen.append(v)
        while head < len(cells) and v in cells[head]:
            head += 1
    return vertex_set(chosen)


def _remaining_degrees(lay: SnakeLayout, head: int) -> dict[int, int]:
    edges = set()
    for cell in lay.cells[head:]:
        for a, b in zip(cell, cell[1:] + cell[:1]):
            edges.add((min(a, b), max(a, b)))
    degree: dict[int, int] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    return degree


# ---------------------------------------------------------------------------
# straight segments


def segment_sequence(spec: SnakeSpec) -> list[int]:
    """Cell counts of the maximal straight segments, head to tail.

    A run of cells is straight when no vertex lies on two of its internal
    shared edges; consecutive maximal runs overlap in the cell where the
    snake turns.
    """
    if not spec.is_square:
        raise SnakeError("segment sequences are defined for square-celled snakes")
    lay = spec.layout
    breaks = [0]
    for k in range(1, len(lay.junctions)):
        if set(lay.junctions[k - 1]) & set(lay.junctions[k]):
            breaks.append(k)
    breaks.append(len(lay.cells) - 1)
    return [b - a + 1 for a, b in zip(breaks, breaks[1:])]


def is_nonsingular(spec: SnakeSpec) -> bool:
    return all(d >= 3 for d in segment_sequence(spec))


def segment_formula(spec: SnakeSpec) -> int:
    segments = segment_sequence(spec)
    if any(d < 3 for d in segments):
        raise SnakeError("segment formula needs a nonsingular snake")
    return sum(ceil(d / 2) for d in segments) - len(segments) + 1
