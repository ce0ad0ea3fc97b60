from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

from ..errors import FieldMismatch
from ..exactnum import Cyclotomic, QSeries


class ZQSeries:
    """A Laurent series in ž whose coefficients are q-series.

    ``coeffs[i]`` multiplies ž^(zmin + i); every exponent below ``zprec`` is known.
    """

    __slots__ = ("order", "zmin", "coeffs")

    def __init__(self, order: int, zmin: int, coeffs: Iterable[QSeries]):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if c.order != order:
                raise FieldMismatch(
                    f"A ž-coefficient over Q(zeta_{c.order}) in a series over Q(zeta_{order})."
                )
        self.order = order
        self.zmin = zmin
        self.coeffs = coeffs

    @property
    def zprec(self) -> int:
        return self.zmin + len(self.coeffs)

    @property
    def qprec(self) -> int:
        return min((c.prec for c in self.coeffs), default=0)

    def coefficient(self, exponent: int) -> QSeries:
        if exponent >= self.zprec:
            raise IndexError(f"ž^{exponent} is past the truncation order {self.zprec}.")
        if exponent < self.zmin:
            return QSeries.zero(self.order, self.qprec)
        return self.coeffs[exponent - self.zmin]

    def _aligned(self, other: "ZQSeries"):
        if other.order != self.order:
            raise FieldMismatch("Cannot combine ž-series over different cyclotomic fields.")
        zmin = min(self.zmin, other.zmin)
        zprec = min(self.zprec, other.zprec)
        return zmin, zprec

    def __add__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        zmin, zprec = self._aligned(other)
        return ZQSeries(
            self.order,
            zmin,
            (self.coefficient(e) + other.coefficient(e) for e in range(zmin, zprec)),
        )

    def __neg__(self):
        return ZQSeries(self.order, self.zmin, (-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, QSeries)):
            return ZQSeries(self.order, self.zmin, (c * other for c in self.coeffs))
        if not isinstance(other, ZQSeries):
            return NotImplemented
        zmin = self.zmin + other.zmin
        zprec = min(self.zprec + other.zmin, other.zprec + self.zmin)
        out = []
        for e in range(zmin, zprec):
            acc = None
            for i, a in enumerate(self.coeffs):
                j = e - self.zmin - i - other.zmin
                if 0 <= j < len(other.coeffs):
                    term = a * other.coeffs[j]
                    acc = term if acc is None else acc + term
            out.append(acc)
        return ZQSeries(self.order, zmin, out)

    __rmul__ = __mul__

    def derive(self) -> "ZQSeries":
        """d/dž; the top known exponent drops by one."""
        out = [c * (self.zmin + i) for i, c in enumerate(self.coeffs)]
        if self.zmin == 0:
            return ZQSeries(self.order, 0, out[1:])
        return ZQSeries(self.order, self.zmin - 1, out)

    def reflect(self) -> "ZQSeries":
        """ž ↦ -ž."""
        return ZQSeries(
            self.order,
            self.zmin,
            (-c if (self.zmin + i) % 2 else c for i, c in enumerate(self.coeffs)),
        )

    def truncate(self, zprec: int) -> "ZQSeries":
        return ZQSeries(self.order, self.zmin, self.coeffs[: max(zprec - self.zmin, 0)])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        try:
            return (self - other).is_zero()
        except FieldMismatch:
            return False

    __hash__ = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "zmin": self.zmin,
            "zprec": self.zprec,
            "coefficients": [c.to_strings() for c in self.coeffs],
        }

    def __repr__(self):
        return (
            f"<ZQSeries order={self.order} zmin={self.zmin} zprec={self.zprec} "
            f"qprec={self.qprec}>"
        )


class LaurentData:
    """σ, τ, υ, ν for one (n, a): the Laurent coefficients of r_a after the residue."""

    def __init__(
        self,
        n: int,
        a: int,
        sigma: QSeries,
        tau: QSeries,
        upsilon: QSeries,
        nu: Optional[QSeries] = None,
        **kwargs,
    ) -> None:
        self.n = n
        self.a = a
        self.sigma = sigma
        self.tau = tau
        self.upsilon = upsilon
        self.nu = nu
        self.kwargs = kwargs

    @property
    def qprec(self) -> int:
        return self.sigma.prec

    def series(self) -> List[QSeries]:
        return [s for s in (self.sigma, self.tau, self.upsilon, self.nu) if s is not None]

    def to_json(self) -> Dict[str, Any]:
        data = {
            "n": self.n,
            "a": self.a,
            "qprec": self.qprec,
            "sigma": self.sigma.to_strings(),
            "tau": self.tau.to_strings(),
            "upsilon": self.upsilon.to_strings(),
        }
        if self.nu is not None:
            data["nu"] = self.nu.to_strings()
        return data

    def __repr__(self):
        return f"<LaurentData n={self.n} a={self.a} qprec={self.qprec}>"
