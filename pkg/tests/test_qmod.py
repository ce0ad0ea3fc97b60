from fractions import Fraction

import numpy as np
import pytest

from modmat.errors import IndexConstraintViolated, IndexDivisibleByN, NonconvergentInput
from modmat.exactnum import Cyclotomic, QSeries
from modmat.qmod import (
    KINDS,
    bernoulli,
    identity_suite,
    laurent_data,
    numeric_oracle,
    r_series,
    sigma_numeric,
    sigma_series,
    suite_cases,
    theta_derivatives,
    theta_logderiv_numeric,
    theta_numeric,
    verify_identity,
    wp_numeric,
    wp_value,
)


@pytest.mark.parametrize(
    "k, value",
    [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, 0), (4, Fraction(-1, 30))],
)
def test_bernoulli(k, value):
    assert bernoulli(k) == value


def test_sigma_series_constant_term():
    series = sigma_series(10, 3, 6)
    x = Cyclotomic.zeta(10, 3)
    assert series[0] == (x + 1) / (2 * (x - 1))
    assert series[1] == Cyclotomic.zeta(10, -3) - x
    assert series.prec == 6


def test_sigma_is_odd_in_the_index():
    assert sigma_series(10, 3, 8) == -sigma_series(10, 7, 8)


def test_laurent_data_starts_with_sigma():
    data = laurent_data(10, 1, 8)
    assert data.sigma == sigma_series(10, 1, 8)
    assert data.a == 1
    assert data.qprec == 8


def test_r_series_shape():
    r = r_series(10, 1, 4, 6)
    assert r.zmin == -1
    assert r.zprec == 4
    assert r.coefficient(-1) == QSeries.one(10, 6)
    assert r.coefficient(-2).leading_order() is None
    with pytest.raises(IndexError):
        r.coefficient(4)


def test_wp_value_from_sigma_and_tau():
    data = laurent_data(11, 2, 8)
    wp, _ = wp_value(11, 2, 8)
    assert wp == data.sigma * data.sigma - data.tau * 2


def test_index_divisible_by_n():
    with pytest.raises(IndexDivisibleByN):
        sigma_series(10, 20, 5)
    with pytest.raises(IndexDivisibleByN):
        laurent_data(10, 0, 5)


@pytest.mark.parametrize("kind", KINDS)
def test_identity_suite_by_kind(kind):
    reports = identity_suite(10, qprec=8, zprec=4, kinds=[kind])
    assert reports
    failed = [r.details for r in reports if not r]
    assert not failed


def test_suite_cases_respect_the_exclusions():
    n = 10
    for kind, indices in suite_cases(n, ["BK"]):
        assert indices[0] not in (n - 3, n - 1, 0, 2)
    for kind, indices in suite_cases(n, ["ST"]):
        assert sum(indices) % n == 0


def test_identity_index_constraints():
    with pytest.raises(IndexConstraintViolated):
        verify_identity("ST", 10, (1, 2, 3))
    with pytest.raises(IndexConstraintViolated):
        verify_identity("BK", 10, (2,))
    with pytest.raises(IndexConstraintViolated):
        verify_identity("RR", 10, (3, 7))
    with pytest.raises(IndexConstraintViolated):
        verify_identity("SIGMA", 10, (10,))
    with pytest.raises(IndexConstraintViolated):
        verify_identity("nope", 10, (1,))


def test_theta_is_odd_under_translation():
    tau = 0.3 + 1.2j
    z = 0.17 + 0.05j
    assert np.isclose(theta_numeric(z + 1, tau), -theta_numeric(z, tau))
    assert np.isclose(theta_numeric(-z, tau), -theta_numeric(z, tau))


def test_sigma_numeric_matches_the_series():
    tau = 1.1j
    q = np.exp(2j * np.pi * tau)
    exact = sigma_series(12, 5, 30).evaluate(q)
    assert np.isclose(exact, sigma_numeric(12, 5, tau), rtol=1e-10)


def test_nonconvergent_input():
    with pytest.raises(NonconvergentInput):
        theta_numeric(0.1, -1j)
    with pytest.raises(NonconvergentInput):
        theta_numeric(0.1, 1j, terms=0)


def test_numeric_oracle():
    report = numeric_oracle(10)
    assert report, report.details
    assert report.details["approximate"] is True
    assert report.details["max_error"] <= 1e-9
    assert "theta_shift" in [v["quantity"] for v in report.details["values"]]


@pytest.mark.slow
@pytest.mark.parametrize("n", [13, 17])
def test_numeric_oracle_other_levels(n):
    assert numeric_oracle(n)


@pytest.mark.parametrize("n", [10, 11, 12, 13, 14])
def test_sigma_agrees_across_both_routes(n):
    reports = identity_suite(n, qprec=8, zprec=2, kinds=["SIGMA"])
    assert len(reports) == n - 1
    assert all(reports), [r.details for r in reports if not r]


@pytest.mark.parametrize("n", [10, 11, 13])
def test_wp_is_symmetric_under_negation(n):
    for a in range(1, n):
        data, mirror = laurent_data(n, a, 8), laurent_data(n, n - a, 8)
        left = data.sigma * data.sigma - data.tau * 2
        assert left == mirror.sigma * mirror.sigma - mirror.tau * 2


def test_theta_quasi_period():
    tau = 0.2 + 1.1j
    z = 0.13 + 0.04j
    factor = -np.exp(-1j * np.pi * tau - 2j * np.pi * z)
    assert np.isclose(theta_numeric(z + tau, tau), factor * theta_numeric(z, tau), rtol=1e-10)


def test_contour_derivatives_match_finite_differences():
    tau = 1.1j
    z, h = 0.3, 1e-5
    value, first, second, _ = theta_derivatives(z, tau)
    assert np.isclose(value, theta_numeric(z, tau), rtol=1e-12)
    forward, backward = theta_numeric(z + h, tau), theta_numeric(z - h, tau)
    assert np.isclose(first, (forward - backward) / (2 * h), rtol=1e-8)
    assert np.isclose(second, (forward - 2 * value + backward) / h ** 2, rtol=1e-4)


def test_sigma_numeric_is_the_log_derivative_of_theta():
    tau, h = 1.1j, 1e-6
    z = 3 / 11
    slope = (np.log(theta_numeric(z + h, tau)) - np.log(theta_numeric(z - h, tau))) / (2 * h)
    assert np.isclose(theta_logderiv_numeric(z, tau), slope, rtol=1e-8)
    assert np.isclose(sigma_numeric(11, 3, tau), slope / (2j * np.pi), rtol=1e-8)


def test_wp_numeric_has_no_constant_term_at_the_pole():
    tau, z = 1.1j, 1e-3
    # ℘(z) = 1/z^2 + O(z^2)
    assert abs(wp_numeric(z, tau) - 1 / z ** 2) < 1e-3
    assert np.isclose(wp_numeric(0.3, tau), wp_numeric(-0.3, tau), rtol=1e-10)
