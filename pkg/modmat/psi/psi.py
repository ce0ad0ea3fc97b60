import logging
from functools import lru_cache
from typing import Dict, Tuple

from ..cusps import frame_row
from ..cusps.objects import check_level
from ..errors import DenominatorNotUnit, FrameMismatch, IndexConstraintViolated
from ..exactnum import QSeries
from ..qmod import sigma_series
from .objects import PsiMatrix

log = logging.getLogger("modmat.psi")


class SigmaTable:
    """σ_j for one level, computed once per index mod n."""

    def __init__(self, n: int, qprec: int):
        self.n = n
        self.qprec = qprec
        self._cache: Dict[int, QSeries] = {}

    def __call__(self, j: int) -> QSeries:
        j %= self.n
        if j not in self._cache:
            self._cache[j] = sigma_series(self.n, j, self.qprec)
        return self._cache[j]

    def denominator(self) -> QSeries:
        return self(6) - self(3) - self(2) - self(1)

    def a_numerator(self, k: int) -> QSeries:
        return self(k + 3) - self(k - 1) - self(3) - self(1)

    def b_numerator(self, k: int) -> QSeries:
        return self(k + 3) - self(k - 2) - self(3) - self(2)


def _constant_row(n: int, qprec: int, values) -> Tuple[QSeries, ...]:
    return tuple(QSeries.constant(n, v, qprec) for v in values)


@lru_cache(maxsize=32)
def psi_matrix(n: int, qprec: int = 25) -> PsiMatrix:
    """Rows (1, a_k, b_k) with a_k, b_k the σ-ratios, plus the fixed frame rows."""
    check_level(n)
    sigma = SigmaTable(n, qprec)
    denominator = sigma.denominator()
    if not denominator[0]:
        raise DenominatorNotUnit(
            f"σ6 - σ3 - σ2 - σ1 has no constant term at level {n}; it cannot be inverted."
        )
    inverse = denominator.inverse()
    one = QSeries.one(n, qprec)
    rows = []
    for k in range(n):
        fixed = frame_row(n, k)
        if k == 0:
            rows.append(_constant_row(n, qprec, (1, 0, 0)))
        elif k == 3:
            rows.append(_constant_row(n, qprec, (1, 1, 1)))
        elif fixed is not None:
            rows.append(_constant_row(n, qprec, fixed))
        else:
            rows.append((one, sigma.a_numerator(k) * inverse, sigma.b_numerator(k) * inverse))
    log.debug(f"Built ψ_{n} to O(q^{qprec}).")
    return PsiMatrix(n, qprec, rows)


def ak_bk_alt(n: int, k: int, qprec: int = 25) -> Tuple[QSeries, QSeries]:
    """a_k and b_k from the one-index-shift formulas instead of the σ6 denominator."""
    check_level(n)
    k %= n
    if k in {0, 1, 2, n - 3, n - 2, n - 1}:
        raise IndexConstraintViolated(f"The shifted formulas are not defined at k = {k} mod {n}.")
    sigma = SigmaTable(n, qprec)
    a_den = sigma(k + 2) - sigma(k) + sigma(1) - sigma(3)
    b_den = sigma(k + 1) - sigma(k) + sigma(2) - sigma(3)
    if not a_den[0] or not b_den[0]:
        raise IndexConstraintViolated(
            f"A shifted denominator has no constant term at k = {k}, n = {n}."
        )
    a_k = (sigma(5) - sigma(3) * 2 + sigma(1)) / a_den
    b_k = (sigma(4) - sigma(3) * 2 + sigma(2)) / b_den
    return a_k, b_k


def recover_st(m: PsiMatrix) -> Tuple[QSeries, QSeries]:
    """s(τ) and t(τ) from p_{-1} = (1 : s : 0) and p_{-4} = (1 : t : 1)."""
    minus_one, minus_four = m[m.n - 1], m[m.n - 4]
    if minus_one[0] != 1 or minus_one[2]:
        raise FrameMismatch(f"Row {m.n - 1} is not of the form (1 : s : 0).")
    if minus_four[0] != 1 or minus_four[2] != 1:
        raise FrameMismatch(f"Row {m.n - 4} is not of the form (1 : t : 1).")
    return minus_one[1], minus_four[1]
