import logging
from typing import Any, Dict, List, Sequence, Tuple

from ..errors import DegenerateIntersection
from ..exactnum import BiPoly, BiRat, Matrix, cross, det3
from ..matroid import is_proportional
from .objects import MONOMIALS, ChainParams, ChainWindow, Point, tidy

log = logging.getLogger("modmat.chain")


def base_points(params: ChainParams) -> Dict[int, Point]:
    """p_{-4}, ..., p_3: the canonical frame plus the points fixed by s and t."""
    s, t = params.s, params.t
    one = s / s
    zero = s - s
    return {
        -4: (one, t, one),
        -3: (zero, one, one),
        -2: (s - 1, zero, s),
        -1: (one, s, zero),
        0: (one, zero, zero),
        1: (zero, one, zero),
        2: (zero, zero, one),
        3: (one, one, one),
    }


def closed_form_points(params: ChainParams) -> Dict[int, Point]:
    """p_{-4}, ..., p_5 with the first coordinate scaled to 1 wherever it is nonzero."""
    s, t = params.s, params.t
    one = s / s
    zero = s - s
    shared = (s - 1) * (1 + s - t)
    return {
        -4: (one, t, one),
        -3: (zero, one, one),
        -2: (one, zero, s / (s - 1)),
        -1: (one, s, zero),
        0: (one, zero, zero),
        1: (zero, one, zero),
        2: (zero, zero, one),
        3: (one, one, one),
        4: (one, s * t / (t - 1), s / (t - 1)),
        5: (one, s * (t - 1) / shared, s * s / shared),
    }


def _candidate_pairs(points: Dict[int, Point], m: int) -> List[Tuple[int, int]]:
    target = -m
    pairs = [
        (i, target - i) for i in points if i < target - i and (target - i) in points
    ]
    return sorted(pairs, key=lambda p: (max(abs(p[0]), abs(p[1])), min(p)))


def _intersect(points: Dict[int, Point], m: int) -> Point:
    lines: List[Point] = []
    used = []
    for i, j in _candidate_pairs(points, m):
        line = cross(points[i], points[j])
        if not any(line):
            continue
        if lines and is_proportional(line, lines[0]):
            continue
        lines.append(line)
        used.append((i, j))
        if len(lines) == 2:
            break
    if len(lines) < 2:
        raise DegenerateIntersection(f"No two distinct lines determine p_{m}.")
    point = cross(lines[0], lines[1])
    if not any(point):
        raise DegenerateIntersection(f"The lines chosen for p_{m} coincide.")
    log.debug(f"p_{m} from the lines through {used[0]} and {used[1]}.")
    return tidy(point)


def chain_extend(params: ChainParams, kmin: int = -4, kmax: int = 5) -> ChainWindow:
    """Grow the chain until it covers [kmin, kmax].

    A new label m sits on every line p_i p_j with i + j = -m. The window always contains
    [-4, 5] and may reach past kmin when the upper end needs more pairs.
    """
    points = {k: tidy(p) for k, p in base_points(params).items()}
    lo, hi = -4, 3
    kmin, kmax = min(kmin, -4), max(kmax, 5)
    while lo > kmin or hi < kmax:
        wanted = []
        if hi < kmax:
            wanted.append(hi + 1)
        if lo > kmin:
            wanted.append(lo - 1)
        wanted.sort(key=abs)
        m = next((k for k in wanted if len(_candidate_pairs(points, k)) >= 2), None)
        if m is None:
            m = lo - 1 if wanted[0] == hi + 1 else hi + 1
        points[m] = _intersect(points, m)
        lo, hi = min(lo, m), max(hi, m)
    return ChainWindow(params, points)


def periodicity_residual(params: ChainParams, n: int) -> List[Any]:
    """Two 2x2 minors of (p_k; p_{k+n}) for k = 0..3, all zero iff p_k = p_{k+n} there."""
    window = chain_extend(params, -4, n + 4)
    residuals = []
    for k in range(4):
        p, q = window[k], window[k + n]
        r = next(i for i, x in enumerate(p) if x)
        for c in range(3):
            if c != r:
                residuals.append(p[r] * q[c] - p[c] * q[r])
    return residuals


def det_of_labels(points: Dict[int, Point], i: int, j: int, k: int):
    return det3((points[i], points[j], points[k]))


def _monomial_row(point: Sequence[Any]) -> List[Any]:
    row = []
    for a, b, c in MONOMIALS:
        row.append(point[0] ** a * point[1] ** b * point[2] ** c)
    return row


def interpolation_matrix(params: ChainParams) -> Matrix:
    """Cubic monomials, in MONOMIALS order, at p_{-3}, ..., p_5."""
    points = closed_form_points(params)
    return Matrix(_monomial_row(points[k]) for k in range(-3, 6))


def _common_denominator(row: Sequence[BiRat]) -> BiPoly:
    common = BiPoly.constant(1)
    for x in row:
        if x and common.divide_exact(x.den) is None:
            q = x.den.divide_exact(common)
            common = x.den if q is not None else common * x.den
    return common


def interpolation_minor(params: ChainParams, column: int):
    """The 9x9 minor that omits one monomial column."""
    minor = interpolation_matrix(params).delete_column(column)
    if not params.is_symbolic:
        return minor.det()
    rows = []
    scale = BiPoly.constant(1)
    for row in minor.rows:
        common = _common_denominator(row)
        scale = scale * common
        rows.append([x.num * common.divide_exact(x.den) if x else BiPoly() for x in row])
    return BiRat(Matrix(rows).det(), scale)
