"""Closed-form decycling numbers for complete graphs, cubes and grids.

Where no formula is known, the answer carries bounds instead of a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Iterable, Sequence

from .bounds import (
    CUBE_EXACT,
    CUBE_RECORDED_UPPER,
    LOWER,
    UPPER,
    BoundReport,
    cube_lower_bound,
    grid_lower_bound,
    grid_upper_bound,
)
from .generators import grid, grid_id
from .graph import GraphError, VertexSet, is_decycling_set, vertex_set

ASYMPTOTIC_CONSTANT = 2


@dataclass(frozen=True)
class FormulaAnswer:
    value: int | None
    citation: str
    fallback: BoundReport | None = None

    def __post_init__(self) -> None:
        if (self.value is None) == (self.fallback is None):
            raise ValueError("a formula answer holds either a value or fallback bounds")

    @property
    def bounds(self) -> tuple[int, int | None]:
        if self.value is not None:
            return self.value, self.value
        return self.fallback.lower, self.fallback.upper


def complete_formula(p: int) -> int:
    if p < 1:
        raise GraphError("complete graph needs p >= 1")
    return max(p - 2, 0)


def multipartite_formula(parts: Sequence[int]) -> int:
    """A largest induced forest is one whole part plus one vertex from elsewhere."""
    if not parts or any(k < 1 for k in parts):
        raise GraphError("need a non-empty list of positive part sizes")
    if len(parts) == 1:
        return 0
    return sum(parts) - max(parts) - 1


def cube_formula(n: int) -> FormulaAnswer:
    if n < 1:
        raise GraphError("cube dimension must be >= 1")
    if n in CUBE_EXACT:
        return FormulaAnswer(CUBE_EXACT[n], "exact cube table")
    report = BoundReport()
    report.add("cube-lower", LOWER, cube_lower_bound(n), "doubling and counting bound for cubes")
    if n in CUBE_RECORDED_UPPER:
        report.add("cube-recorded", UPPER, CUBE_RECORDED_UPPER[n], "recorded cube decycling set")
    report.add("bipartite", UPPER, 2 ** (n - 1) - 1, "smaller colour class minus one")
    return FormulaAnswer(None, "cube bounds", report)


# ---------------------------------------------------------------------------
# grids


def _small_rows(m: int, n: int) -> tuple[int, str] | None:
    if m == 2:
        return n // 2, "two-row grids"
    if m == 3:
        return 3 * n // 4, "three-row grids"
    if m == 4:
        return n, "four-row grids"
    if m == 5:
        return 3 * n // 2 - n // 8 - 1, "five-row grids"
    if m == 6:
        return 5 * n // 3, "six-row grids"
    if m == 7:
        return 2 * n - 1, "seven-row grids"
    return None


def grid_formula_cases(m: int, n: int) -> list[tuple[int, str]]:
    """Every closed form that covers P_m x P_n, as ``(value, name)`` pairs."""
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    m, n = sorted((m, n))
    cases = []
    if m == 1:
        cases.append((0, "paths"))
    if n <= 3 and m >= 2:
        # the 3 x 3 grid keeps its outer 8-cycle once the centre is gone
        cases.append((2 if m == 3 else 1, "small grids"))
    if 2 <= m <= 7 and n >= 4:
        cases.append(_small_rows(m, n))
    r, rem = divmod(m - 1, 3)
    if r >= 1 and rem == 0 and n % 2 == 0:
        cases.append((r * n - r + 1, "3r+1 rows, even columns"))
    r, rem = divmod(m - 1, 6)
    s, rem_n = divmod(n + 1, 4)
    if r >= 1 and rem == 0 and rem_n == 0:
        cases.append((8 * r * s - 4 * r + 1, "6r+1 rows, 4s-1 columns"))
    return cases


def grid_formula(m: int, n: int) -> FormulaAnswer:
    cases = grid_formula_cases(m, n)
    if cases:
        values = {v for v, _ in cases}
        if len(values) > 1:
            raise AssertionError(f"grid formulas disagree at ({m},{n}): {cases}")
        return FormulaAnswer(cases[0][0], "; ".join(name for _, name in cases))
    report = BoundReport()
    report.add("grid-lower", LOWER, grid_lower_bound(m, n), "grid counting bound")
    report.add("grid-upper", UPPER, grid_upper_bound(m, n), "stacked seven-row strips")
    return FormulaAnswer(None, "grid bounds", report)


def grid_expand_decycling_set(m: int, n: int, s: Iterable[int]) -> VertexSet:
    """Lift a minimum decycling set of P_m x P_n to one of P_{2m-1} x P_{2n-1}.

    Position (i, j) moves to (2i - 1, 2j - 1) and every (even, even) position
    is added.  Those added vertices cut the big grid back to a subdivided copy
    of the small one, so the result decycles.
    """
    s = vertex_set(s)
    if len(s) != ceil((m * n - m - n + 2) / 3):
        raise GraphError(f"expected a decycling set of size {ceil((m * n - m - n + 2) / 3)}, got {len(s)}")
    if not is_decycling_set(grid(m, n), s):
        raise GraphError("input is not a decycling set of the small grid")
    wide = 2 * n - 1
    lifted = [grid_id(wide, 2 * (v // n) + 1, 2 * (v % n) + 1) for v in s]
    cuts = [grid_id(wide, 2 * a, 2 * b) for a in range(1, m) for b in range(1, n)]
    result = vertex_set(lifted + cuts)
    if not is_decycling_set(grid(2 * m - 1, wide), result):
        raise GraphError("expanded set does not decycle the large grid")
    return result


def grid_asymptotic_check(m: int, n: int, value: int) -> bool:
    """Is ``value`` within ASYMPTOTIC_CONSTANT * (m + n) of mn/3?"""
    if m <= 2 or n <= 2:
        raise GraphError("asymptotic check needs m, n > 2")
    return abs(3 * value - m * n) <= 3 * ASYMPTOTIC_CONSTANT * (m + n)
