"""Exact (ž, q)-expansions of the theta log-derivative and of the quotient r_a.

Everything is normalized by powers of 2πi: ž = 2πi·z and r̂_a = r_a / 2πi, so the
coefficients live in Q(ζ_n)[[q]].
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import List, Tuple

from ..errors import IndexDivisibleByN
from ..exactnum import Cyclotomic, QSeries
from .objects import LaurentData, ZQSeries

log = logging.getLogger("modmat.qmod")


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2."""
    if k < 0:
        raise ValueError("Bernoulli numbers are indexed from 0.")
    if k == 0:
        return Fraction(1)
    total = sum(comb(k + 1, j) * bernoulli(j) for j in range(k))
    return -total / (k + 1)


@lru_cache(maxsize=None)
def _divisors(m: int) -> Tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


def _residue(n: int, a: int) -> int:
    a %= n
    if a == 0:
        raise IndexDivisibleByN(f"The index must be nonzero modulo {n}.")
    return a


def sigma_series(n: int, a: int, qprec: int) -> QSeries:
    """σ_a from its divisor-sum expansion."""
    a = _residue(n, a)
    x = Cyclotomic.zeta(n, a)

    def coefficient(m: int):
        if m == 0:
            return (x + 1) / (2 * (x - 1))
        total = Cyclotomic.zero(n)
        for d in _divisors(m):
            total = total - Cyclotomic.zeta(n, d * a) + Cyclotomic.zeta(n, -d * a)
        return total

    return QSeries.from_function(n, qprec, coefficient)


def _constant_term_expansion(n: int, a: int, zprec: int) -> List[Cyclotomic]:
    """ž-coefficients of (u + 1) / (2(u - 1)) with u = ζ^a·e^ž."""
    x = Cyclotomic.zeta(n, a)
    num = [x + 1] + [x * Fraction(1, factorial(j)) for j in range(1, zprec)]
    den = [x - 1] + [x * Fraction(1, factorial(j)) for j in range(1, zprec)]
    inv0 = den[0].inverse()
    out: List[Cyclotomic] = []
    for j in range(zprec):
        acc = num[j]
        for i in range(1, j + 1):
            acc = acc - den[i] * out[j - i]
        out.append(acc * inv0)
    return [c / 2 for c in out]


def theta_logderiv(n: int, a: int, zprec: int, qprec: int) -> ZQSeries:
    """The normalized log-derivative of θ at a/n + z as a power series in ž."""
    a = _residue(n, a)
    head = _constant_term_expansion(n, a, zprec)
    coeffs = []
    for j in range(zprec):
        scale = Fraction(1, factorial(j))
        sign = -1 if j % 2 else 1

        def coefficient(m: int, j=j, scale=scale, sign=sign):
            if m == 0:
                return head[j]
            total = Cyclotomic.zero(n)
            for d in _divisors(m):
                term = sign * Cyclotomic.zeta(n, -d * a) - Cyclotomic.zeta(n, d * a)
                total = total + term * d ** j
            return total * scale

        coeffs.append(QSeries.from_function(n, qprec, coefficient))
    return ZQSeries(n, 0, coeffs)


def _regular_part_at_zero(n: int, zprec: int, qprec: int) -> List[QSeries]:
    """ž-coefficients of the normalized log-derivative of θ at 0, minus the pole 1/ž."""
    coeffs = []
    for j in range(zprec):
        if j % 2 == 0:
            coeffs.append(QSeries.zero(n, qprec))
            continue
        scale = Fraction(-2, factorial(j))

        def coefficient(m: int, j=j, scale=scale):
            if m == 0:
                return bernoulli(j + 1) / factorial(j + 1)
            return scale * sum(d ** j for d in _divisors(m))

        coeffs.append(QSeries.from_function(n, qprec, coefficient))
    return coeffs


def r_series(n: int, a: int, zprec: int, qprec: int) -> ZQSeries:
    """r̂_a = 1/ž + σ_a + τ_a ž + ... through ž^(zprec - 1).

    The logarithmic derivative of r̂_a·ž is regular at 0; integrating it and exponentiating
    fixes the residue at 1.
    """
    log_a = theta_logderiv(n, a, zprec, qprec)
    log_0 = _regular_part_at_zero(n, zprec, qprec)
    alpha = [None] + [(log_a.coeffs[k - 1] - log_0[k - 1]) / k for k in range(1, zprec + 1)]
    # exp(Σ α_k ž^k) by e_j = (1/j) Σ k α_k e_{j-k}
    exp = [QSeries.one(n, qprec)]
    for j in range(1, zprec + 1):
        acc = QSeries.zero(n, qprec)
        for k in range(1, j + 1):
            acc = acc + alpha[k] * exp[j - k] * k
        exp.append(acc / j)
    log.debug(f"Built r_{a} for n={n} through ž^{zprec - 1} and q^{qprec - 1}.")
    return ZQSeries(n, -1, exp)


@lru_cache(maxsize=256)
def laurent_data(n: int, a: int, qprec: int) -> LaurentData:
    r = r_series(n, a, 4, qprec)
    return LaurentData(
        n,
        a % n,
        sigma=r.coefficient(0),
        tau=r.coefficient(1),
        upsilon=r.coefficient(2),
        nu=r.coefficient(3),
    )


def wp_value(n: int, a: int, qprec: int) -> Tuple[QSeries, QSeries]:
    """℘(a/n)/(2πi)^2 and ℘'(a/n)/(2πi)^3 from σ, τ, υ."""
    data = laurent_data(n, a, qprec)
    s, t, u = data.sigma, data.tau, data.upsilon
    wp = s * s - t * 2
    wp_prime = s * s * s * (-2) + s * t * 6 - u * 6
    return wp, wp_prime
