"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python tests/test_acceptance.py`` for the lines alone.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import random_connected_graph, random_graph  # noqa: E402
from decycling.bounds import cube_bounds_table, cube_lower_bound, grid_upper_bound  # noqa: E402
from decycling.families import (  # noqa: E402
    cube_formula,
    grid_expand_decycling_set,
    grid_formula,
    grid_formula_cases,
)
from decycling.generators import (  # noqa: E402
    complete,
    complete_bipartite,
    grid,
    hypercube,
    maximal_outerplanar,
    petersen,
    triangle_replacement,
)
from decycling.graph import (  # noqa: E402
    Graph,
    bipartition,
    cartesian_product,
    connectivity,
    count_4cycles,
    cycle_rank,
    distance,
    identification,
    independence_and_covering,
    is_decycling_set,
    outlay,
    smooth_homeomorphic,
)
from decycling.snake import (  # noqa: E402
    build_snake,
    greedy_decycle,
    is_nonsingular,
    nabla_snake,
    segment_formula,
    square_snakes,
)
from decycling.solver import branch_and_bound, greedy_decycling, oracle  # noqa: E402

Q5_BUDGET = 30 * 60
GRID_ORACLE_CAP = 30


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    print("\n" + line, file=sys.__stdout__, flush=True)


# ---------------------------------------------------------------------------


def check_cube_table():
    start = time.perf_counter()
    small = [branch_and_bound(hypercube(n)).value for n in range(1, 5)]
    small_oracle = [oracle(hypercube(n)).value for n in range(1, 5)]
    small_time = time.perf_counter() - start
    q5 = branch_and_bound(hypercube(5), budget=Q5_BUDGET)
    if q5.optimal:
        q5_ok = q5.value == 14 and is_decycling_set(hypercube(5), q5.witness)
    else:
        q5_ok = q5.lower >= 12 and q5.upper == 14
    ok = small == small_oracle == [0, 1, 3, 6] and small_time < 10 and q5_ok
    detail = (
        f"Q1..Q4 = {small} in {small_time:.2f}s; Q5 {q5.status} value {q5.value} "
        f"(lower {q5.lower}, {q5.nodes_explored} nodes, {q5.elapsed:.1f}s)"
    )
    return ok, detail


def check_cube_bounds():
    rows = [cube_bounds_table(n) for n in range(9, 14)]
    lowers = [lo for lo, _ in rows]
    uppers = [hi for _, hi in rows]
    ok = lowers == [225, 456, 922, 1862, 3755] and uppers == [237, 493, 1005, 2029, 4077]
    # bound consistency for the cubes that are out of reach
    for n in range(6, 9):
        ok &= cube_lower_bound(n) <= cube_formula(n).value <= 2 ** (n - 1) - 1
    return ok, f"lower {lowers}, upper {uppers}"


def check_grid_formulas():
    start = time.perf_counter()
    instances, mismatches = 0, []
    for m in range(1, GRID_ORACLE_CAP + 1):
        for n in range(m, GRID_ORACLE_CAP // m + 1):
            answer = grid_formula(m, n)
            if answer.value is None:
                continue
            instances += 1
            value = oracle(grid(m, n), cap=GRID_ORACLE_CAP).value
            if value != answer.value:
                mismatches.append((m, n, answer.value, value))
    spots = {(2, 6): 3, (4, 5): 5, (5, 8): 10, (3, 7): 5}
    spot_ok = True
    for (m, n), value in spots.items():
        spot_ok &= grid_formula(m, n).value == value
        if m * n <= GRID_ORACLE_CAP:
            spot_ok &= oracle(grid(m, n), cap=GRID_ORACLE_CAP).value == value
        else:
            spot_ok &= branch_and_bound(grid(m, n)).value == value
    elapsed = time.perf_counter() - start
    ok = not mismatches and spot_ok and elapsed < 300
    return ok, f"{instances} instances, {len(mismatches)} mismatches {mismatches[:3]}, spots ok={spot_ok}, {elapsed:.1f}s"


def check_formula_consistency():
    overlaps, disagreements = 0, []
    for m in range(1, 41):
        for n in range(1, 41):
            cases = grid_formula_cases(m, n)
            if len(cases) >= 2:
                overlaps += 1
                if len({v for v, _ in cases}) > 1:
                    disagreements.append((m, n, cases))
    seven = {v for v, _ in grid_formula_cases(7, 7)}
    triple = seven == {13} and len(grid_formula_cases(7, 7)) == 2 and grid_upper_bound(7, 7) == 13
    ok = not disagreements and triple
    return ok, f"{overlaps} overlapping cells, {len(disagreements)} disagreements, (7,7) triple ok={triple}"


def check_doubling():
    small = oracle(grid(4, 4)).witness
    big = grid_expand_decycling_set(4, 4, small)
    decycles = is_decycling_set(grid(7, 7), big)
    ok = len(small) == 4 and len(big) == 13 == grid_formula(7, 7).value and decycles
    return ok, f"|S| = {len(small)} -> {len(big)} vertices in P7xP7, decycling={decycles}"


def check_snakes():
    start = time.perf_counter()
    counts = {"nickname": 0, "greedy": 0}
    snakes = 0
    first = []
    for cells in range(2, 9):
        for spec in square_snakes(cells):
            snakes += 1
            g = build_snake(spec)
            value = oracle(g).value
            chosen = greedy_decycle(spec)
            if nabla_snake(spec) != value:
                counts["nickname"] += 1
                first.append(("nickname", spec.attachments, value))
            if len(chosen) != value or not is_decycling_set(g, chosen):
                counts["greedy"] += 1
                first.append(("greedy", spec.attachments, value))
    nonsingular, segment_bad = 0, 0
    for cells in range(3, 11):
        for spec in square_snakes(cells):
            if is_nonsingular(spec):
                nonsingular += 1
                if segment_formula(spec) != oracle(build_snake(spec)).value:
                    segment_bad += 1
    elapsed = time.perf_counter() - start
    ok = not any(counts.values()) and segment_bad == 0 and elapsed < 600
    detail = (
        f"{snakes} snakes: nickname mismatches {counts['nickname']}, greedy mismatches {counts['greedy']}; "
        f"{nonsingular} nonsingular, segment mismatches {segment_bad}; {elapsed:.1f}s {first[:2]}"
    )
    return ok, detail


def _subdivide(rng, g: Graph) -> Graph:
    edges = list(g.edges)
    p = g.vertex_count
    out = []
    for u, v in edges:
        if rng.random() < 0.4:
            out += [(u, p), (p, v)]
            p += 1
        else:
            out.append((u, v))
    return Graph(p, tuple(out))


def check_structure():
    rng = random.Random(2024)
    results = {}

    def tally(name, ok):
        total, bad = results.get(name, (0, 0))
        results[name] = (total + 1, bad + (0 if ok else 1))

    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(2, 14), rng.uniform(0.05, 0.4))
        rank = g.edge_count - g.vertex_count + 1
        sets = [oracle(g).witness, greedy_decycling(g)]
        tally("outlay identity", all(outlay(g, s) == rank for s in sets))

    for _ in range(200):
        base = random_graph(rng, rng.randint(2, 9), rng.uniform(0.2, 0.6))
        g = _subdivide(rng, base)
        tally("homeomorph invariance", oracle(g).value == oracle(smooth_homeomorphic(g)).value)

    done = 0
    while done < 200:
        g = random_graph(rng, rng.randint(2, 14), rng.uniform(0.1, 0.6))
        if g.edge_count == 0:
            continue
        done += 1
        tally("covering bound", oracle(g).value <= independence_and_covering(g)[1] - 1)

    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.6))
        nabla = oracle(g).value
        product = oracle(cartesian_product(complete(2), g), cap=20).value
        beta = independence_and_covering(g)[1]
        tally("product bounds", 2 * nabla <= product <= nabla + beta)

    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14), rng.uniform(0.1, 0.7))
        tally("connectivity", connectivity(g) <= oracle(g).value + 1)

    both_minimum = 0
    while results.get("identification", (0, 0))[0] < 200:
        h = random_graph(rng, rng.randint(3, 10), rng.uniform(0.2, 0.6))
        j = random_graph(rng, rng.randint(3, 10), rng.uniform(0.2, 0.6))
        s, t = list(oracle(h).witness), list(oracle(j).witness)
        minimum = len(s) == len(t)
        # pad the smaller set with spare vertices so that the sizes match
        spare_h = [v for v in range(h.vertex_count) if v not in s]
        spare_j = [v for v in range(j.vertex_count) if v not in t]
        while len(s) < len(t) and spare_h:
            s.append(spare_h.pop())
        while len(t) < len(s) and spare_j:
            t.append(spare_j.pop())
        if len(s) != len(t):
            continue
        glued = identification(h, j, list(zip(s, t)))
        ok = is_decycling_set(glued, s)
        if minimum:
            both_minimum += 1
            ok &= oracle(glued).value == len(s)
        tally("identification", ok)

    for n in range(2, 6):
        q = hypercube(n)
        adj = [set(a) for a in q.adjacency]
        tally("cube 4-cycles", count_4cycles(q) == n * (n - 1) * 2 ** (n - 3))
        for v in range(q.vertex_count):
            for a, b in combinations(sorted(adj[v]), 2):
                tally("cube 4-cycles", len((adj[a] & adj[b]) - {v}) == 1)
        for u, v in q.edges:
            tally("cube 4-cycles", sum(1 for a in adj[u] - {v} for b in adj[v] - {u} if b in adj[a]) == n - 1)
        for side in bipartition(q):
            for a, b in combinations(side, 2):
                tally("star intersections", len(adj[a] & adj[b]) in (0, 2))
    for n in range(1, 9):
        q = hypercube(n)
        for x0 in range(2**n):
            sizes = [0] * (n + 1)
            for v in range(2**n):
                sizes[distance(q, x0, v)] += 1
            tally("sphere sizes", sizes == [comb(n, k) for k in range(n + 1)])

    short = [name for name, (total, _) in results.items() if total < 200]
    ok = all(bad == 0 for _, bad in results.values()) and not short
    detail = ", ".join(f"{name} {total - bad}/{total}" for name, (total, bad) in results.items())
    return ok, f"{detail}; identification with both sides minimum: {both_minimum}; under 200: {short}"


def check_triangle_replacement():
    ok = True
    parts = []
    for name, cubic in (("K4", complete(4)), ("K3,3", complete_bipartite(3, 3)), ("Petersen", petersen())):
        n = cubic.vertex_count // 2
        h = triangle_replacement(cubic)
        value = oracle(h, cap=h.vertex_count).value
        gap = value - Fraction(cycle_rank(h), 2)
        ok &= value >= 2 * n and gap >= Fraction(n, 2)
        slack = value - Fraction(h.edge_count - h.vertex_count, 2)
        parts.append(f"{name}: value {value} (2n = {2 * n}), gap over (q-p+1)/2 = {gap}, over (q-p)/2 = {slack}")
    return ok, "; ".join(parts) + " (needs gap >= n/2)"


def check_outerplanar():
    instances, violations = 0, []
    for n in range(3, 19):
        for seed in range(50):
            value = oracle(maximal_outerplanar(n, seed)).value
            instances += 1
            if not 1 <= value <= n // 3:
                violations.append((n, seed, value))
    return not violations, f"{instances} graphs (n = 3..18, 50 seeds), {len(violations)} violations"


CRITERIA = [
    (1, "cube table", check_cube_table),
    (2, "cube bounds table", check_cube_bounds),
    (3, "grid formulas vs oracle", check_grid_formulas),
    (4, "grid formula consistency", check_formula_consistency),
    (5, "grid doubling construction", check_doubling),
    (6, "snakes", check_snakes),
    (7, "structural properties", check_structure),
    (8, "triangle replacement", check_triangle_replacement),
    (9, "maximal outerplanar", check_outerplanar),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    report(number, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        report(number, title, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
