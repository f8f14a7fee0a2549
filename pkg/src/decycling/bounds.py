"""Lower and upper bounds on the decycling number.

Every bound comes back as a plain integer; :func:`bound_report` gathers the
ones that apply to a graph into a :class:`BoundReport`, each row carrying a
short description of where the value comes from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .graph import (
    DEFAULT_EXACT_LIMIT,
    Graph,
    GraphError,
    bipartition,
    component_lists,
    cycle_rank,
    independence_and_covering,
    induced_subgraph,
    is_connected,
)

LOWER = "lower"
UPPER = "upper"

# exact decycling numbers of Q_1 .. Q_8
CUBE_EXACT = {1: 0, 2: 1, 3: 3, 4: 6, 5: 14, 6: 28, 7: 56, 8: 112}
# best known decycling sets of Q_9 .. Q_13
CUBE_RECORDED_UPPER = {9: 237, 10: 493, 11: 1005, 12: 2029, 13: 4077}


@dataclass(frozen=True)
class Bound:
    name: str
    kind: str
    value: int
    citation: str


@dataclass
class BoundReport:
    rows: list[Bound] = field(default_factory=list)

    def add(self, name: str, kind: str, value: int, citation: str) -> None:
        self.rows.append(Bound(name, kind, int(value), citation))

    @property
    def lower(self) -> int:
        return max((b.value for b in self.rows if b.kind == LOWER), default=0)

    @property
    def upper(self) -> int | None:
        return min((b.value for b in self.rows if b.kind == UPPER), default=None)

    def lowers(self) -> list[Bound]:
        return [b for b in self.rows if b.kind == LOWER]

    def uppers(self) -> list[Bound]:
        return [b for b in self.rows if b.kind == UPPER]

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "bounds": [b.__dict__ for b in self.rows],
        }


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise GraphError(f"{what} needs a connected graph")


def _require_simple(g: Graph, what: str) -> None:
    if not g.is_simple:
        raise GraphError(f"{what} needs a simple graph")


def degree_sum_lower_bound(g: Graph) -> int:
    """Fewest top degrees whose (d - 1) terms cover the cycle rank.

    Deleting a vertex of degree d lowers ``q - p + 1`` by at most ``d - 1``.
    """
    _require_connected(g, "degree-sum bound")
    _require_simple(g, "degree-sum bound")
    need = cycle_rank(g)
    total = 0
    for s, d in enumerate(sorted(g.degrees, reverse=True), 1):
        if total >= need:
            return s - 1
        total += d - 1
    if total >= need:
        return g.vertex_count
    raise GraphError("degree sum cannot cover the cycle rank")  # unreachable on simple graphs


def max_degree_lower_bound(g: Graph) -> int:
    _require_connected(g, "maximum-degree bound")
    _require_simple(g, "maximum-degree bound")
    delta = g.max_degree()
    if delta <= 1:
        return 0
    return ceil(Fraction(cycle_rank(g), delta - 1))


def _per_component(g: Graph, bound) -> int:
    total = 0
    for members in component_lists(g):
        comp, _ = induced_subgraph(g, members)
        total += bound(comp)
    return total


def cube_lower_bound(n: int) -> int:
    """Doubling from the previous cube combined with the counting bound."""
    if n < 1:
        raise GraphError("cube dimension must be >= 1")
    if n == 1:
        return 0
    half = 2 ** (n - 1)
    counting = ceil(half - Fraction(half - 1, n - 1))
    previous = CUBE_EXACT[n - 1] if n - 1 in CUBE_EXACT else cube_lower_bound(n - 1)
    return max(2 * previous, counting)


def cube_bounds_table(n: int) -> tuple[int, int]:
    if n not in CUBE_RECORDED_UPPER:
        raise GraphError("the cube bounds table covers 9 <= n <= 13")
    return cube_lower_bound(n), CUBE_RECORDED_UPPER[n]


def bipartite_upper_bound(g: Graph) -> int:
    """Keep one vertex of the smaller colour class: what is left is a star forest."""
    sides = bipartition(g)
    if sides is None:
        raise GraphError("bipartite bound needs a bipartite graph")
    return max(min(len(sides[0]), len(sides[1])) - 1, 0)


def covering_upper_bound(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    """One less than the vertex covering number."""
    _require_simple(g, "covering bound")
    if g.edge_count == 0:
        raise GraphError("covering bound needs at least one edge")
    _, beta = independence_and_covering(g, limit)
    return beta - 1


def product_bounds(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> tuple[int, int]:
    """Bounds on the decycling number of K_2 x g from g's own value and covering number."""
    from .solver import decycling_number

    _require_simple(g, "product bounds")
    nabla = decycling_number(g)
    _, beta = independence_and_covering(g, limit)
    return 2 * nabla, nabla + beta


def grid_lower_bound(m: int, n: int) -> int:
    if m < 3 or n < 3:
        raise GraphError("grid lower bound needs m, n >= 3")
    return (m * n - m - n + 2) // 3


def _grid_value(m: int, n: int) -> int:
    from .families import grid_formula
    from .generators import grid
    from .solver import decycling_number

    answer = grid_formula(m, n)
    if answer.value is not None:
        return answer.value
    return decycling_number(grid(m, n))


def grid_upper_bound(m: int, n: int) -> int:
    """Stack copies of a 7-row strip that share boundary rows, in either direction.

    With ``m = 6q + r`` and ``1 <= r <= 6`` the strips cost ``2n - 1`` each and
    the leftover ``r`` rows are decycled on their own.
    """
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    best = None
    for rows, cols in ((m, n), (n, m)):
        q, r = divmod(rows - 1, 6)
        r += 1
        value = q * (2 * cols - 1) + (_grid_value(r, cols) if r > 1 else 0)
        best = value if best is None else min(best, value)
    return best


def outerplanar_bounds(n: int) -> tuple[int, int]:
    if n < 3:
        raise GraphError("maximal outerplanar graphs have n >= 3")
    return 1, n // 3


def bound_report(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> BoundReport:
    """All bounds that apply to ``g``, summed over components where they need connectivity."""
    from .solver import cycle_packing_lower_bound, greedy_decycling

    report = BoundReport()
    rank = cycle_rank(g)
    report.add("cycle-rank", UPPER, rank, "each deleted cycle vertex lowers the cycle rank")
    if g.is_simple:
        report.add("degree-sum", LOWER, _per_component(g, degree_sum_lower_bound),
                   "largest degrees must absorb the cycle rank")
        report.add("max-degree", LOWER, _per_component(g, max_degree_lower_bound),
                   "cycle rank over maximum degree minus one")
    report.add("cycle-packing", LOWER, cycle_packing_lower_bound(g), "greedy vertex-disjoint cycles")
    report.add("greedy", UPPER, len(greedy_decycling(g)), "greedy decycling set")
    if bipartition(g) is not None:
        report.add("bipartite", UPPER, bipartite_upper_bound(g), "smaller colour class minus one")
    if g.is_simple and g.edge_count and g.vertex_count <= limit:
        report.add("covering", UPPER, covering_upper_bound(g, limit), "vertex covering number minus one")
    return report


def strongest_lower_bound(g: Graph) -> int:
    return bound_report(g).lower
