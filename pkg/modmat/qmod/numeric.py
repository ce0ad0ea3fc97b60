"""Floating point theta oracles for cross-checking the exact expansions.

Everything here is derived from the product for θ alone. Derivatives in z come from Cauchy's
formula on a small circle, which is exact up to rounding for an entire function sampled at
enough points.
"""
import logging
from math import factorial
from typing import List

import numpy as np

from ..errors import NonconvergentInput
from ..objects import VerificationReport
from .expansions import sigma_series, wp_value

log = logging.getLogger("modmat.qmod")

CONTOUR_RADIUS = 0.1
CONTOUR_POINTS = 64


def _nome(tau: complex, terms: int):
    if tau.imag <= 0:
        raise NonconvergentInput(f"The product converges only for Im(tau) > 0, got {tau}.")
    if terms < 1:
        raise NonconvergentInput("At least one product factor is needed.")
    q = np.exp(2j * np.pi * tau)
    return q ** np.arange(1, terms + 1)


def _theta(z, tau: complex, terms: int):
    z = np.asarray(z, dtype=complex)
    ql = _nome(tau, terms).reshape((-1,) + (1,) * z.ndim)
    w = np.exp(2j * np.pi * z)
    product = np.prod((1 - ql) * (1 - ql * w) * (1 - ql / w), axis=0)
    return np.exp(1j * np.pi * tau / 4) * 2 * np.sin(np.pi * z) * product


def theta_numeric(z: complex, tau: complex, terms: int = 40) -> complex:
    """θ(z, τ) = e^{πiτ/4}·2 sin(πz)·Π (1 - q^l)(1 - q^l w)(1 - q^l / w), w = e^{2πiz}."""
    return complex(_theta(complex(z), complex(tau), terms))


def theta_derivatives(z: complex, tau: complex, terms: int = 40, order: int = 3) -> List[complex]:
    """[θ, θ', ..., θ^(order)] at z, from the trapezoid rule on |ζ - z| = CONTOUR_RADIUS."""
    angles = 2 * np.pi * np.arange(CONTOUR_POINTS) / CONTOUR_POINTS
    samples = _theta(complex(z) + CONTOUR_RADIUS * np.exp(1j * angles), complex(tau), terms)
    taylor = np.fft.fft(samples) / CONTOUR_POINTS
    return [complex(taylor[k]) * factorial(k) / CONTOUR_RADIUS ** k for k in range(order + 1)]


def theta_logderiv_numeric(z: complex, tau: complex, terms: int = 40) -> complex:
    """∂/∂z log θ(z, τ)."""
    value, first = theta_derivatives(z, tau, terms, order=1)
    return first / value


def sigma_numeric(n: int, a: int, tau: complex, terms: int = 40) -> complex:
    """σ_a(τ) = (θ'/θ)(a/n, τ) / 2πi."""
    return theta_logderiv_numeric(a / n, tau, terms) / (2j * np.pi)


def wp_numeric(z: complex, tau: complex, terms: int = 40) -> complex:
    """Weierstrass ℘ for the lattice Z + τZ, as -(log θ)'' + θ'''(0) / 3θ'(0)."""
    value, first, second = theta_derivatives(z, tau, terms, order=2)
    log_second = second / value - (first / value) ** 2
    _, slope, _, third = theta_derivatives(0, tau, terms, order=3)
    return -log_second + third / (3 * slope)



def _pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def numeric_oracle(
    n: int, tau: complex = 1.1j, qprec: int = 30, terms: int = 40, tolerance: float = 1e-9
) -> VerificationReport:
    """Evaluate the exact σ and ℘ expansions at q = e^(2πiτ) and compare with the products."""
    tau = complex(tau)
    q = complex(_nome(tau, 1)[0])
    two_pi_i = 2j * np.pi
    entries = []
    for a in (1, 2):
        exact = sigma_series(n, a, qprec).evaluate(q)
        entries.append((f"sigma_{a}", exact, sigma_numeric(n, a, tau, terms)))
    for a in range(1, n // 2 + 1):
        wp, _ = wp_value(n, a, qprec)
        entries.append((f"wp_{a}", wp.evaluate(q) * two_pi_i ** 2, wp_numeric(a / n, tau, terms)))
    # θ(z + 1) = -θ(z)
    shifted = theta_numeric(1 / n + 1, tau, terms)
    entries.append(("theta_shift", shifted, -theta_numeric(1 / n, tau, terms)))
    values = []
    worst = 0.0
    for name, series, direct in entries:
        error = abs(series - direct) / max(1.0, abs(direct))
        worst = max(worst, error)
        values.append(
            {"quantity": name, "series": _pair(series), "direct": _pair(direct), "error": error}
        )
    log.debug(f"Numeric oracle at n={n}, tau={tau}: worst relative error {worst:.3e}.")
    return VerificationReport(
        n,
        "numeric",
        worst <= tolerance,
        qprec=qprec,
        details={
            "approximate": True,
            "tau": _pair(tau),
            "tolerance": tolerance,
            "max_error": worst,
            "values": values,
        },
    )
