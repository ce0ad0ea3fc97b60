import pytest

from modmat.cusps import cusp_config
from modmat.errors import (
    IndexConstraintViolated,
    IndexDivisibleByN,
    LevelTooSmall,
)
from modmat.psi import (
    SigmaTable,
    ak_bk_alt,
    alt_check,
    closed_form_check,
    closed_form_residuals,
    collinearity_check,
    cubic_vanishing_check,
    cusp_constant_check,
    prop_all_solve,
    psi_matrix,
    recover_st,
    span_labels,
    span_solve,
)


def test_frame_rows(psi10):
    n = psi10.n
    assert len(psi10) == n
    assert [x == v for x, v in zip(psi10[0], (1, 0, 0))] == [True] * 3
    assert [x == v for x, v in zip(psi10[3], (1, 1, 1))] == [True] * 3
    assert [x == v for x, v in zip(psi10[n - 3], (0, 1, 1))] == [True] * 3
    assert psi10.b(n - 4) == 1
    assert psi10[-1] is psi10[n - 1]


def test_collinearity(psi10):
    report = collinearity_check(psi10)
    assert report, report.details
    assert report.details["bases_checked"] == 20
    sampled = [tuple(map(int, k.split(","))) for k in report.details["basis_leading_orders"]]
    assert sampled[0] == (0, 1, 2)
    assert sampled[-1] == (7, 8, 9)
    assert report.residual_order is None


def test_cubic_vanishes_on_every_row(psi10):
    assert cubic_vanishing_check(psi10), "the chain cubic misses a row"


def test_closed_forms(psi10):
    assert closed_form_check(psi10)
    names = [name for name, _ in closed_form_residuals(psi10)]
    assert "p5 third" in names


def test_shifted_formulas(psi10):
    report = alt_check(psi10)
    assert report, report.details
    assert report.details["checked"]


def test_recover_st_matches_the_cusp(psi10):
    s, t = recover_st(psi10)
    config = cusp_config(10, 1)
    assert s[0] == config[9][1]
    assert t[0] == config[6][1]


def test_cusp_constant_term():
    report = cusp_constant_check(10)
    assert report, report.details
    assert report.details["units"] == [1, 3, 7, 9]


def test_ak_bk_alt_exclusions():
    for k in (0, 1, 2, 7, 8, 9):
        with pytest.raises(IndexConstraintViolated):
            ak_bk_alt(10, k, 6)


def test_level_too_small():
    with pytest.raises(LevelTooSmall):
        psi_matrix(9, 6)


def test_span_labels():
    assert span_labels(10) == [0, 3, 4, 5, 6, 8, 9]


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_prop_all_solve(i):
    solution = prop_all_solve(10, i, 12)
    assert solution.exact
    assert solution.kwargs["index"] == i
    assert any(solution.a_weights.values()) or any(solution.b_weights.values())


def test_span_of_a_numerator():
    target = SigmaTable(10, 12).a_numerator(4)
    assert span_solve(10, target, 12).exact


def test_prop_all_solve_rejects_zero_index():
    with pytest.raises(IndexDivisibleByN):
        prop_all_solve(10, 10, 6)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(11, 19))
def test_psi_checks_over_levels(n):
    m = psi_matrix(n, 15)
    for check in (collinearity_check, cubic_vanishing_check, closed_form_check, alt_check):
        assert check(m), check.__name__
    assert cusp_constant_check(n)


@pytest.mark.parametrize("target", [{2: 2, 1: -4}, {2: 8, 1: -6}])
def test_intermediate_combinations_lie_in_the_span(target):
    assert span_solve(10, target, 12).exact
