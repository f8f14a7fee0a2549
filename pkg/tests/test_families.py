import pytest

from decycling.families import (
    FormulaAnswer,
    complete_formula,
    cube_formula,
    grid_asymptotic_check,
    grid_expand_decycling_set,
    grid_formula,
    grid_formula_cases,
    multipartite_formula,
)
from decycling.bounds import BoundReport, grid_lower_bound, grid_upper_bound
from decycling.generators import complete_multipartite, grid, hypercube
from decycling.graph import GraphError, is_decycling_set
from decycling.solver import branch_and_bound, oracle
from decycling.verify import _partitions


def test_complete_formula():
    assert [complete_formula(p) for p in (1, 2, 5)] == [0, 0, 3]


def test_multipartite_formula():
    assert multipartite_formula([3, 7]) == 2
    assert multipartite_formula([1] * 6) == 4
    assert multipartite_formula([2, 2, 2]) == 3
    assert multipartite_formula([5]) == 0


def test_multipartite_matches_oracle():
    for parts in _partitions(12):
        assert multipartite_formula(parts) == oracle(complete_multipartite(parts)).value, parts


def test_cube_formula():
    assert cube_formula(6).value == 28
    assert cube_formula(1).value == 0
    assert cube_formula(9).bounds == (225, 237)
    assert cube_formula(14).bounds == (cube_formula(14).fallback.lower, 2**13 - 1)
    for n in range(1, 5):
        assert cube_formula(n).value == oracle(hypercube(n)).value


def test_formula_answer_holds_one_side():
    with pytest.raises(ValueError):
        FormulaAnswer(None, "nothing")
    with pytest.raises(ValueError):
        FormulaAnswer(3, "both", BoundReport())


@pytest.mark.parametrize(
    "m,n,value",
    [(2, 6, 3), (5, 8, 10), (7, 7, 13), (3, 3, 2), (4, 5, 5), (3, 7, 5), (1, 9, 0), (2, 2, 1), (10, 12, 34)],
)
def test_grid_formula_values(m, n, value):
    assert grid_formula(m, n).value == value
    assert grid_formula(n, m).value == value


def test_grid_formula_cases_agree():
    for m in range(1, 41):
        for n in range(1, 41):
            values = {v for v, _ in grid_formula_cases(m, n)}
            assert len(values) <= 1, (m, n)


def test_grid_formula_triple_at_seven():
    cases = grid_formula_cases(7, 7)
    assert len(cases) == 2 and {v for v, _ in cases} == {13}
    assert grid_upper_bound(7, 7) == 13


def test_grid_fallback():
    answer = grid_formula(8, 9)
    assert answer.value is None
    lo, hi = answer.bounds
    assert (lo, hi) == (grid_lower_bound(8, 9), grid_upper_bound(8, 9))
    assert lo <= hi


def test_grid_formula_matches_solver():
    for m in range(1, 8):
        for n in range(m, 43 // m + 1):
            answer = grid_formula(m, n)
            if answer.value is not None:
                assert answer.value == branch_and_bound(grid(m, n)).value, (m, n)


def test_grid_bounds_around_formula():
    for m in range(3, 30):
        for n in range(m, 30):
            answer = grid_formula(m, n)
            if answer.value is not None:
                assert grid_lower_bound(m, n) <= answer.value <= grid_upper_bound(m, n), (m, n)


@pytest.mark.parametrize("m,n,size", [(4, 4, 13), (4, 6, 21)])
def test_expand_decycling_set(m, n, size):
    small = branch_and_bound(grid(m, n)).witness
    big = grid_expand_decycling_set(m, n, small)
    assert len(big) == size == grid_formula(2 * m - 1, 2 * n - 1).value
    assert is_decycling_set(grid(2 * m - 1, 2 * n - 1), big)


def test_expand_rejects_bad_input():
    with pytest.raises(GraphError):
        grid_expand_decycling_set(4, 4, [0, 1, 2, 3])
    with pytest.raises(GraphError):
        grid_expand_decycling_set(4, 4, [0])


def test_asymptotic_check():
    assert grid_asymptotic_check(4, 9, 9)
    assert grid_asymptotic_check(7, 7, 13)
    assert grid_asymptotic_check(3, 4, 2)
    assert not grid_asymptotic_check(3, 3, 20)
    with pytest.raises(GraphError):
        grid_asymptotic_check(2, 5, 2)
    for m in range(3, 41):
        for n in range(3, 41):
            answer = grid_formula(m, n)
            if answer.value is not None:
                assert grid_asymptotic_check(m, n, answer.value)
