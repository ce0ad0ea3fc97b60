import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from ..cusps import frame_row
from ..cusps.objects import check_level
from ..errors import IndexDivisibleByN, NoSolution, NoSolutionAtPrecision
from ..exactnum import Matrix, QSeries, linear_solve
from ..qmod import residual_order
from .objects import SpanSolution
from .psi import SigmaTable

log = logging.getLogger("modmat.psi")

Target = Union[QSeries, Mapping[int, Union[int, Fraction]]]


def span_labels(n: int) -> List[int]:
    """The k whose a_k, b_k come from the σ-ratio formulas."""
    return [k for k in range(n) if frame_row(n, k) is None]


def _flatten(series: QSeries) -> List[Fraction]:
    return [x for c in series.coeffs for x in c.coeffs]


def _target_series(sigma: SigmaTable, target: Target) -> QSeries:
    if isinstance(target, QSeries):
        return target
    total = QSeries.zero(sigma.n, sigma.qprec)
    for j, weight in target.items():
        if j % sigma.n == 0:
            raise IndexDivisibleByN(f"σ_{j} is not defined at level {sigma.n}.")
        total = total + sigma(j) * Fraction(weight)
    return total


def span_solve(n: int, target: Target, qprec: int = 25) -> SpanSolution:
    """Rational weights with target = Σ c_k A_k + Σ d_k B_k, where A_k, B_k are the numerators
    of a_k, b_k over the common denominator σ6 - σ3 - σ2 - σ1.

    ``target`` is a series or a mapping j -> weight meaning Σ weight·σ_j.
    """
    check_level(n)
    sigma = SigmaTable(n, qprec)
    labels = span_labels(n)
    columns: List[Tuple[str, int, QSeries]] = []
    for k in labels:
        columns.append(("a", k, sigma.a_numerator(k)))
        columns.append(("b", k, sigma.b_numerator(k)))
    goal = _target_series(sigma, target)
    flat = [_flatten(c) for _, _, c in columns]
    system = Matrix([list(row) for row in zip(*flat)])
    rhs = Matrix.column_vector(_flatten(goal))
    try:
        weights = linear_solve(system, rhs).column(0)
    except NoSolution as exc:
        raise NoSolution(
            f"The target is outside the span of the row numerators to O(q^{qprec}): "
            f"{exc.message}"
        ) from exc
    a_weights: Dict[int, Fraction] = {}
    b_weights: Dict[int, Fraction] = {}
    combination = QSeries.zero(n, qprec)
    for (kind, k, series), w in zip(columns, weights):
        w = Fraction(w)
        (a_weights if kind == "a" else b_weights)[k] = w
        if w:
            combination = combination + series * w
    order = residual_order([combination - goal])
    log.debug(f"Span solve at n={n}: {sum(1 for w in weights if w)} nonzero weights.")
    return SpanSolution(n, qprec, a_weights, b_weights, residual_order=order)


def prop_all_solve(n: int, i: int, qprec: int = 25) -> SpanSolution:
    """Weights writing σ_i/(σ6 - σ3 - σ2 - σ1) as a constant combination of a_k and b_k."""
    if i % n == 0:
        raise IndexDivisibleByN(f"σ_{i} is not defined at level {n}.")
    try:
        solution = span_solve(n, {i: 1}, qprec)
    except NoSolution as exc:
        raise NoSolutionAtPrecision(exc.message) from exc
    if not solution.exact:
        raise NoSolutionAtPrecision(
            f"σ_{i} is reproduced only up to O(q^{solution.residual_order}) at level {n}."
        )
    solution.kwargs["index"] = i
    return solution
