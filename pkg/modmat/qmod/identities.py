import logging
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import IndexConstraintViolated
from ..exactnum import QSeries
from ..objects import VerificationReport
from .expansions import laurent_data, r_series, sigma_series, wp_value
from .objects import ZQSeries

log = logging.getLogger("modmat.qmod")

KINDS = ("ST", "MAIN", "CUSPONLY", "BK", "AK1", "RR", "SIGMA")

Residuals = List[QSeries]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise IndexConstraintViolated(message)


def _arity(kind: str, indices: Sequence[int], size: int) -> Tuple[int, ...]:
    _require(len(indices) == size, f"{kind} takes {size} indices, got {len(indices)}.")
    return tuple(int(i) for i in indices)


def _nonzero(n: int, kind: str, *indices: int) -> None:
    for j in indices:
        _require(j % n != 0, f"{kind} needs every σ index nonzero mod {n}; {j} is not.")


class _Sigma:
    """σ_j, τ_j and ℘ values looked up by index mod n."""

    def __init__(self, n: int, qprec: int):
        self.n = n
        self.qprec = qprec

    def __call__(self, j: int) -> QSeries:
        return laurent_data(self.n, j % self.n, self.qprec).sigma

    def tau(self, j: int) -> QSeries:
        return laurent_data(self.n, j % self.n, self.qprec).tau

    def wp(self, j: int) -> QSeries:
        return wp_value(self.n, j % self.n, self.qprec)[0]


def _st(n: int, indices, qprec: int, zprec: int) -> Residuals:
    a, b, c = _arity("ST", indices, 3)
    _nonzero(n, "ST", a, b, c)
    _require((a + b + c) % n == 0, f"ST needs a + b + c = 0 mod {n}.")
    s = _Sigma(n, qprec)
    return [s(a) * s(b) + s(b) * s(c) + s(c) * s(a) + s.tau(a) + s.tau(b) + s.tau(c)]


def _product(s: _Sigma, a: int, b: int, k: int) -> QSeries:
    return (s(k + b - a) - s(k) - s(b) + s(a)) * (s(k + b) - s(k - a) - s(b) - s(a))


def _main(n: int, indices, qprec: int, zprec: int) -> Residuals:
    a, b, k = _arity("MAIN", indices, 3)
    _nonzero(n, "MAIN", a, b, k, k + b - a, k + b, k - a)
    s = _Sigma(n, qprec)
    closed = s(b) * s(b) - s(a) * s(a) + s.tau(a) * 2 - s.tau(b) * 2
    return [_product(s, a, b, k) - closed]


def _cusponly(n: int, indices, qprec: int, zprec: int) -> Residuals:
    a, b, k = _arity("CUSPONLY", indices, 3)
    _nonzero(n, "CUSPONLY", a, b, k, k + b - a, k + b, k - a)
    s = _Sigma(n, qprec)
    return [_product(s, a, b, k) - (s.wp(b) - s.wp(a))]


def _bk(n: int, indices, qprec: int, zprec: int) -> Residuals:
    (k,) = _arity("BK", indices, 1)
    _require(k % n not in {(-3) % n, (-1) % n, 0, 2}, f"BK excludes k = -3, -1, 0, 2 mod {n}.")
    _nonzero(n, "BK", 1, 2, 3, 4, 6)
    s = _Sigma(n, qprec)
    denominator = s(6) - s(3) - s(2) - s(1)
    left = (s(4) - s(3) * 2 + s(2)) * denominator
    right = (s(k + 1) - s(k) + s(2) - s(3)) * (s(k + 3) - s(k - 2) - s(3) - s(2))
    return [left - right]


def _ak1(n: int, indices, qprec: int, zprec: int) -> Residuals:
    (k,) = _arity("AK1", indices, 1)
    _require(k % n not in {(-3) % n, (-2) % n, 0, 1}, f"AK1 excludes k = -3, -2, 0, 1 mod {n}.")
    _nonzero(n, "AK1", 1, 2, 3, 5, 6)
    s = _Sigma(n, qprec)
    denominator = s(6) - s(3) - s(2) - s(1)
    left = (s(5) - s(3) * 2 + s(1)) * denominator
    right = (s(k + 2) - s(k) + s(1) - s(3)) * (s(k + 3) - s(k - 1) - s(3) - s(1))
    return [left - right]


@lru_cache(maxsize=128)
def _r(n: int, a: int, zprec: int, qprec: int) -> ZQSeries:
    return r_series(n, a, zprec, qprec)


def _rr(n: int, indices, qprec: int, zprec: int) -> Residuals:
    a, k = _arity("RR", indices, 2)
    _nonzero(n, "RR", a, k, a + k)
    _require(zprec >= 2, "RR needs zprec >= 2.")
    r_a, r_k, r_sum = (_r(n, j % n, zprec, qprec) for j in (a, k, a + k))
    residual = r_a * r_k + r_sum.derive() - r_sum * (r_a.coefficient(0) + r_k.coefficient(0))
    return list(residual.coeffs)


def _sigma_routes(n: int, indices, qprec: int, zprec: int) -> Residuals:
    """The z^0 coefficient of R_a against the divisor-sum expansion of σ_a."""
    (a,) = _arity("SIGMA", indices, 1)
    _nonzero(n, "SIGMA", a)
    return [laurent_data(n, a % n, qprec).sigma - sigma_series(n, a % n, qprec)]


_CHECKS: Dict[str, Callable[..., Residuals]] = {
    "ST": _st,
    "MAIN": _main,
    "CUSPONLY": _cusponly,
    "BK": _bk,
    "AK1": _ak1,
    "RR": _rr,
    "SIGMA": _sigma_routes,
}


def residual_order(residuals: Iterable[QSeries]) -> Optional[int]:
    orders = [r.leading_order() for r in residuals]
    orders = [o for o in orders if o is not None]
    return min(orders) if orders else None


def verify_identity(
    kind: str, n: int, indices: Sequence[int], qprec: int = 25, zprec: int = 6
) -> VerificationReport:
    """Check one q-series identity for one choice of indices, exactly to O(q^qprec).

    Ratio identities are compared after cross-multiplication.
    """
    kind = kind.upper()
    if kind not in _CHECKS:
        raise IndexConstraintViolated(f"Unknown identity {kind!r}; expected one of {KINDS}.")
    residuals = _CHECKS[kind](n, indices, qprec, zprec)
    order = residual_order(residuals)
    details = {"kind": kind, "indices": [int(i) for i in indices]}
    if kind == "RR":
        details["zorder"] = zprec - 2
    log.debug(f"{kind}{tuple(indices)} at n={n}: residual order {order}.")
    return VerificationReport(
        n, f"identity:{kind}", order is None, qprec=qprec, residual_order=order, details=details
    )


def suite_cases(
    n: int, kinds: Optional[Iterable[str]] = None
) -> List[Tuple[str, Tuple[int, ...]]]:
    """Every admissible (kind, indices) pair at level n, in a fixed order."""
    kinds = [k.upper() for k in (kinds or KINDS)]
    cases: List[Tuple[str, Tuple[int, ...]]] = []
    units = range(1, n)
    for kind in kinds:
        if kind == "ST":
            for triple in combinations_with_replacement(units, 3):
                if sum(triple) % n == 0:
                    cases.append((kind, triple))
        elif kind in ("MAIN", "CUSPONLY"):
            firsts = units if kind == "MAIN" else (1,)
            for a in firsts:
                for b in range(a + 1, n):
                    for k in units:
                        if all(j % n for j in (k + b - a, k + b, k - a)):
                            cases.append((kind, (a, b, k)))
        elif kind == "BK":
            excluded = {n - 3, n - 1, 0, 2}
            cases.extend((kind, (k,)) for k in units if k not in excluded)
        elif kind == "AK1":
            excluded = {n - 3, n - 2, 0, 1}
            cases.extend((kind, (k,)) for k in units if k not in excluded)
        elif kind == "RR":
            for a, k in combinations_with_replacement(units, 2):
                if (a + k) % n:
                    cases.append((kind, (a, k)))
        elif kind == "SIGMA":
            cases.extend((kind, (a,)) for a in units)
        else:
            raise IndexConstraintViolated(f"Unknown identity {kind!r}; expected one of {KINDS}.")
    return cases


def identity_suite(
    n: int, qprec: int = 25, zprec: int = 6, kinds: Optional[Iterable[str]] = None
) -> List[VerificationReport]:
    cases = suite_cases(n, kinds)
    log.debug(f"Running {len(cases)} identity checks at n={n}.")
    return [verify_identity(kind, n, indices, qprec, zprec) for kind, indices in cases]
