import logging
from fractions import Fraction
from typing import Dict, List

from ..errors import DegenerateLevel, ZeroIndex
from ..exactnum import Cyclotomic
from ..matroid import Configuration
from .objects import CuspLabel, check_level, check_unit

log = logging.getLogger("modmat.cusps")


def frame_row(n: int, k: int):
    """The rows fixed by the frame whatever the cusp: labels 1, 2 and n - 3."""
    k %= n
    if k == 1:
        return (0, 1, 0)
    if k == 2:
        return (0, 0, 1)
    if k == n - 3:
        return (0, 1, 1)
    return None


def cusp_config(n: int, a: int) -> Configuration:
    """The realization of T_n on the nodal cubic with ζ replaced by ζ^a."""
    check_level(n)
    check_unit(n, a)
    x = Cyclotomic.zeta(n, a)

    def power(e: int) -> Cyclotomic:
        return Cyclotomic.zeta(n, a * e)

    ring = 1 + power(2)
    if not ring or not (1 - power(5)):
        raise DegenerateLevel(f"The cusp formula degenerates at n = {n}, a = {a}.")
    outer_second = (1 - power(2)) * (1 + power(3)) / (1 - power(5))
    outer_third = (1 - x + power(2)) / ring
    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if fixed is not None:
            rows.append(fixed)
            continue
        second = (
            outer_second
            * (1 - power(k))
            * (1 - power(k + 2))
            / ((1 - power(k - 1)) * (1 - power(k + 3)))
        )
        third = (
            outer_third * (1 - power(k)) * (1 - power(k + 1))
            / ((1 - power(k - 2)) * (1 - power(k + 3)))
        )
        rows.append((1, second, third))
    log.debug(f"Built the cusp configuration for n={n}, a={a}.")
    return Configuration(lift_rows(n, rows), field=f"cyclotomic:{n}")


def lift_rows(n: int, rows) -> List:
    def lift(x):
        return x if isinstance(x, Cyclotomic) else Cyclotomic.constant(n, x)

    return [[lift(x) for x in r] for r in rows]


def sigma_at_cusp(n: int, k: int, c: int, d: int) -> Cyclotomic:
    """Limit of σ_k at the cusp with bottom row (c, d), in units of 2πi."""
    if k % n == 0:
        raise ZeroIndex(f"σ_k needs k != 0 mod {n}.")
    CuspLabel(n, c, d)
    if (k * c) % n:
        return Cyclotomic.constant(n, Fraction((k * c) % n, n) - Fraction(1, 2))
    x = Cyclotomic.zeta(n, k * d)
    return (x + 1) / (2 * (x - 1))


def cusp_limit_config(n: int, c: int, d: int) -> Configuration:
    """Limits of the modular realization rows at a cusp where σ6 - σ3 - σ2 - σ1 is nonzero."""
    check_level(n)
    sigma: Dict[int, Cyclotomic] = {}

    def s(j: int) -> Cyclotomic:
        j %= n
        if j not in sigma:
            sigma[j] = sigma_at_cusp(n, j, c, d)
        return sigma[j]

    denominator = s(6) - s(3) - s(2) - s(1)
    if not denominator:
        raise DegenerateLevel(
            f"σ6 - σ3 - σ2 - σ1 vanishes at the cusp ({c}, {d}) of level {n}."
        )
    inverse = denominator.inverse()
    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if fixed is not None:
            rows.append(fixed)
            continue
        a_k = (s(k + 3) - s(k - 1) - s(3) - s(1)) * inverse
        b_k = (s(k + 3) - s(k - 2) - s(3) - s(2)) * inverse
        rows.append((1, a_k, b_k))
    return Configuration(lift_rows(n, rows), field=f"cyclotomic:{n}")


def galois_transport(config: Configuration, u: int) -> Configuration:
    """Apply ζ ↦ ζ^u to every coordinate."""
    return config.map_coordinates(lambda x: x.galois(u))
