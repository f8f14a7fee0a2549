"""Cross-checks of the closed forms against the exact solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from . import families, snake
from .generators import complete, complete_multipartite, grid, hypercube
from .graph import Graph, is_decycling_set
from .solver import ORACLE_CAP, branch_and_bound, oracle

SCOPES = ("families", "grids", "snakes", "all")


@dataclass
class Check:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, what: str) -> None:
        self.instances += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.instances} instances, {len(self.failures)} mismatches"
        if self.failures:
            text += " (first: " + "; ".join(self.failures[:3]) + ")"
        return text


def exact_value(g: Graph) -> int:
    """Oracle when the graph is small enough, certified branch and bound otherwise."""
    if g.vertex_count <= ORACLE_CAP:
        return oracle(g).value
    result = branch_and_bound(g)
    if not result.optimal:
        raise TimeoutError("branch and bound did not finish")
    return result.value


def _partitions(total: int) -> Iterator[tuple[int, ...]]:
    for parts in range(1, total + 1):
        for combo in combinations_with_replacement(range(1, total + 1), parts):
            if sum(combo) <= total:
                yield combo


def check_families(cap: int = 12) -> list[Check]:
    comp = Check("complete graphs")
    for p in range(1, cap + 1):
        comp.record(families.complete_formula(p) == exact_value(complete(p)), f"K_{p}")
    multi = Check("complete multipartite graphs")
    for parts in _partitions(cap):
        expected = families.multipartite_formula(parts)
        multi.record(expected == exact_value(complete_multipartite(parts)), f"parts {parts}")
    cubes = Check("cube table")
    n = 1
    while 2**n <= max(cap, 16):
        cubes.record(families.cube_formula(n).value == exact_value(hypercube(n)), f"Q_{n}")
        n += 1
    return [comp, multi, cubes]


def check_grids(cap: int = 30) -> list[Check]:
    exact = Check("grid formulas")
    bounded = Check("grid bounds")
    for m in range(1, cap + 1):
        for n in range(m, cap // m + 1):
            value = exact_value(grid(m, n))
            answer = families.grid_formula(m, n)
            if answer.value is not None:
                exact.record(answer.value == value, f"({m},{n}) formula {answer.value} vs {value}")
            if m >= 3:
                lo, hi = families.grid_lower_bound(m, n), families.grid_upper_bound(m, n)
                bounded.record(lo <= value <= hi, f"({m},{n}) {lo}..{hi} vs {value}")
    return [exact, bounded]


def check_snakes(cap: int = 8, on_spec: Callable[[snake.SnakeSpec], None] | None = None) -> list[Check]:
    name_check = Check("snake nickname")
    greedy_check = Check("snake greedy")
    segment_check = Check("snake segment formula")
    for cells in range(2, cap + 1):
        for spec in snake.square_snakes(cells):
            g = snake.build_snake(spec)
            value = exact_value(g)
            nick = snake.nabla_snake(spec)
            chosen = snake.greedy_decycle(spec)
            label = "".join("RSL"[a] for a in spec.attachments[1:])
            name_check.record(nick == value, f"{cells} cells {label or '-'}: {nick} vs {value}")
            greedy_check.record(
                len(chosen) == value and is_decycling_set(g, chosen), f"{cells} cells {label or '-'}"
            )
            if snake.is_nonsingular(spec):
                segment_check.record(snake.segment_formula(spec) == value, f"{cells} cells {label or '-'}")
    other = Check("greedy on triangle and pentagon snakes")
    for length in (3, 5):
        for cells in range(2, min(cap, 6) + 1):
            for spec in snake.snakes_with_cells((length,) * cells):
                g = snake.build_snake(spec)
                chosen = snake.greedy_decycle(spec)
                other.record(len(chosen) == exact_value(g) and is_decycling_set(g, chosen), str(spec))
    return [name_check, greedy_check, segment_check, other]


def verify_suite(scope: str = "all", cap: int | None = None) -> list[Check]:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {', '.join(SCOPES)}")
    checks: list[Check] = []
    if scope in ("families", "all"):
        checks += check_families(12 if cap is None else cap)
    if scope in ("grids", "all"):
        checks += check_grids(30 if cap is None else cap)
    if scope in ("snakes", "all"):
        checks += check_snakes(8 if cap is None else cap)
    return checks
