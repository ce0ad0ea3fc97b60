"""Degenerate configurations that appear at the cusps of X_1(n) where the generic rows collapse.

Each builder returns the limiting point set with the frame rows 1, 2 and n - 3 fixed as in
the generic construction.
"""
import logging
from itertools import permutations
from typing import Dict, Optional, Tuple

from ..errors import DegenerateFrame, DegenerateLevel, NoReduction, NoSolution
from ..exactnum import Cyclotomic, Matrix, nullspace
from ..matroid import Configuration, frame_transform, normalize_point, normalized_transform
from .cusps import lift_rows, frame_row
from .objects import CevaReduction, check_level, check_unit

log = logging.getLogger("modmat.cusps")

CONIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def _check_multiple(n: int, m: int, name: str) -> None:
    check_level(n)
    if n % m:
        raise DegenerateLevel(f"The {name} configuration needs n divisible by {m}, got {n}.")


def boroczky_config(n: int, d: int) -> Configuration:
    """The limit at the cusps with c = n/2: even labels on a line, odd labels on a conic."""
    _check_multiple(n, 2, "Böröczky")
    check_unit(n, d)

    def x(e: int) -> Cyclotomic:
        return Cyclotomic.zeta(n, d * e)

    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if fixed is not None:
            rows.append(fixed)
        elif k % 2 == 0:
            third = (1 - x(6)) * (1 - x(k)) / (x(2) * (1 - x(4)) * (1 - x(k - 2)))
            rows.append((1, 0, third))
        else:
            second = (
                (1 - x(2)) * (1 - x(6)) * x(k - 3) / ((1 - x(k - 1)) * (1 - x(k + 3)))
            )
            third = (1 - x(6)) * (1 - x(k + 1)) / ((1 - x(4)) * (1 - x(k + 3)))
            rows.append((1, second, third))
    return Configuration(lift_rows(n, rows), field=f"cyclotomic:{n}")


def boroczky_conic(n: int, d: int) -> Dict[Tuple[int, int, int], Cyclotomic]:
    """The conic through the odd labels, as exponent -> coefficient with the first one 1."""
    config = boroczky_config(n, d)
    rows = []
    for k in range(1, n, 2):
        p = config[k]
        rows.append([p[0] ** a * p[1] ** b * p[2] ** c for a, b, c in CONIC_MONOMIALS])
    basis = nullspace(Matrix(rows))
    if len(basis) != 1:
        raise NoSolution(f"The odd labels of level {n} lie on {len(basis)} independent conics.")
    vector = basis[0]
    lead = next(v for v in vector if v)
    zero = Cyclotomic.zero(n)
    return {mono: zero + v / lead for mono, v in zip(CONIC_MONOMIALS, vector)}


def ceva_config(n: int, d: int) -> Configuration:
    """The limit at the cusps with c = n/3: three collinear families of n/3 points each."""
    _check_multiple(n, 3, "Ceva")
    check_unit(n, d)

    def x(e: int) -> Cyclotomic:
        return Cyclotomic.zeta(n, d * e)

    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if fixed is not None:
            rows.append(fixed)
        elif k % 3 == 0:
            value = (1 + x(3)) * (1 - x(k)) / (1 - x(k + 3))
            rows.append((1, value, value))
        elif k % 3 == 1:
            second = (1 + x(-3)) * (1 - x(k + 2)) / (1 - x(k - 1))
            rows.append((1, second, 1 + x(3)))
        else:
            third = (1 + x(-3)) * (1 - x(k + 1)) / (1 - x(k - 2))
            rows.append((1, 1 + x(-3), third))
    return Configuration(lift_rows(n, rows), field=f"cyclotomic:{n}")


def ceva_points(n: int) -> Dict[Tuple[int, int], Tuple[Cyclotomic, ...]]:
    """(family, l) -> the point with -ζ^{3l} in the family's pattern, normalized."""
    m = n // 3
    zero, one = Cyclotomic.zero(n), Cyclotomic.one(n)
    points = {}
    for l in range(m):
        w = -Cyclotomic.zeta(n, 3 * l)
        points[(0, l)] = normalize_point((one, zero, w))
        points[(1, l)] = normalize_point((zero, w, one))
        points[(2, l)] = normalize_point((w, one, zero))
    return points


def ceva_reduction(n: int, d: int) -> CevaReduction:
    """Find a projective map carrying the Ceva-cusp limit onto the standard Ceva arrangement.

    Labels 0 and 3 lie in residue class 0 mod 3, labels 1 and 2 in classes 1 and 2. The frame
    they form is sent to every admissible choice of targets until all points land.
    """
    config = ceva_config(n, d)
    targets = ceva_points(n)
    lookup = {p: key for key, p in targets.items()}
    m = n // 3
    tried = 0
    for families in permutations(range(3)):
        for l0 in range(m):
            for l3 in range(m):
                if l3 == l0:
                    continue
                for l1 in range(m):
                    for l2 in range(m):
                        tried += 1
                        images = (
                            targets[(families[0], l0)],
                            targets[(families[1], l1)],
                            targets[(families[2], l2)],
                            targets[(families[0], l3)],
                        )
                        try:
                            gamma = frame_transform(images, range(4)).inverse()
                        except DegenerateFrame:
                            continue
                        bijection = _match(gamma, config, lookup)
                        if bijection is not None:
                            log.debug(f"Ceva reduction for n={n}, d={d} after {tried} frames.")
                            return CevaReduction(
                                config, normalized_transform(gamma), bijection, tried=tried
                            )
    raise NoReduction(f"No projective map sends the level {n} Ceva limit onto the Ceva points.")


def _match(gamma: Matrix, config: Configuration, lookup) -> Optional[Dict[int, Tuple[int, int]]]:
    bijection = {}
    for label, point in enumerate(config.points):
        key = lookup.get(normalize_point(gamma.apply(point)))
        if key is None or key in bijection.values():
            return None
        bijection[label] = key
    return bijection


def fourm_config(n: int, d: int) -> Configuration:
    """The limit at the cusps with c = n/4, where σ6 - σ3 - σ2 - σ1 tends to zero."""
    _check_multiple(n, 4, "4m")
    check_unit(n, d)

    def x(e: int) -> Cyclotomic:
        return Cyclotomic.zeta(n, d * e)

    ratio = 1 / (1 - x(4))
    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if fixed is not None:
            rows.append(fixed)
        elif k % 4 == 0:
            u = 1 - x(-k)
            rows.append((1, u, u * ratio))
        elif k % 4 == 1:
            rows.append((0, 1, (1 - x(1 - k)) * ratio))
        elif k % 4 == 2:
            rows.append((0, 0, 1))
        else:
            rows.append((1, 1, (1 - x(k + 1)) * ratio))
    return Configuration(lift_rows(n, rows), field=f"cyclotomic:{n}")
