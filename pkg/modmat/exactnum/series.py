import logging
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import DivisionByNonUnit, ExpOfUnit, FieldMismatch
from .cyclotomic import Cyclotomic, euler_phi, int_poly_mul, reduce_mod_phi

log = logging.getLogger("modmat.exactnum")

Coefficient = Union[int, Fraction, Cyclotomic]


def _lift(order: int, value: Coefficient) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        if value.order != order:
            raise FieldMismatch(
                f"Series over Q(zeta_{order}) cannot hold an element of Q(zeta_{value.order})."
            )
        return value
    return Cyclotomic.constant(order, value)


def _integral_series(coeffs: Sequence[Cyclotomic]) -> Tuple[List[Optional[List[int]]], int]:
    den = 1
    for c in coeffs:
        for x in c.coeffs:
            d = x.denominator
            if d != 1 and den % d:
                den = den // gcd(den, d) * d
    vectors = []
    for c in coeffs:
        if not c:
            vectors.append(None)
            continue
        vectors.append([x.numerator * (den // x.denominator) for x in c.coeffs])
    return vectors, den


class QSeries:
    """A power series in one variable with cyclotomic coefficients, known modulo x^prec.

    The variable is q for modular forms, but the same class carries the ž-expansions at q^0.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Coefficient]):
        self.order = order
        self.coeffs = tuple(_lift(order, c) for c in coeffs)

    @classmethod
    def _make(cls, order: int, coeffs: Tuple[Cyclotomic, ...]) -> "QSeries":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, order: int, prec: int) -> "QSeries":
        return cls._make(order, (Cyclotomic.zero(order),) * prec)

    @classmethod
    def constant(cls, order: int, value: Coefficient, prec: int) -> "QSeries":
        if prec < 1:
            return cls._make(order, ())
        zero = Cyclotomic.zero(order)
        return cls._make(order, (_lift(order, value),) + (zero,) * (prec - 1))

    @classmethod
    def one(cls, order: int, prec: int) -> "QSeries":
        return cls.constant(order, 1, prec)

    @classmethod
    def monomial(cls, order: int, degree: int, prec: int, value: Coefficient = 1) -> "QSeries":
        coeffs = [Cyclotomic.zero(order)] * prec
        if degree < prec:
            coeffs[degree] = _lift(order, value)
        return cls._make(order, tuple(coeffs))

    @classmethod
    def from_function(
        cls, order: int, prec: int, func: Callable[[int], Coefficient]
    ) -> "QSeries":
        return cls(order, (func(k) for k in range(prec)))

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Cyclotomic:
        return self.coeffs[k]

    def truncate(self, prec: int) -> "QSeries":
        return QSeries._make(self.order, self.coeffs[:prec])

    def _check(self, other: "QSeries") -> int:
        if other.order != self.order:
            raise FieldMismatch(
                f"Cannot combine series over Q(zeta_{self.order}) and Q(zeta_{other.order})."
            )
        return min(self.prec, other.prec)

    # ring operations

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            if not self.coeffs:
                return self
            return QSeries._make(self.order, (self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, QSeries):
            return NotImplemented
        n = self._check(other)
        return QSeries._make(
            self.order, tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))
        )

    __radd__ = __add__

    def __neg__(self):
        return QSeries._make(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = self._check(other)
        return QSeries._make(
            self.order, tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))
        )

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, value: Coefficient) -> "QSeries":
        if isinstance(value, Cyclotomic):
            _lift(self.order, value)
            if value.is_rational():
                value = value.coeffs[0]
        return QSeries._make(self.order, tuple(a * value for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self._scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = self._check(other)
        order = self.order
        width = 2 * euler_phi(order) - 1
        left, dl = _integral_series(self.coeffs[:n])
        right, dr = _integral_series(other.coeffs[:n])
        den = dl * dr
        out = []
        for k in range(n):
            acc = [0] * width
            for i in range(k + 1):
                a = left[i]
                b = right[k - i]
                if a is not None and b is not None:
                    int_poly_mul(a, b, acc)
            reduced = reduce_mod_phi(acc, order)
            out.append(Cyclotomic._make(order, tuple(Fraction(c, den) for c in reduced)))
        return QSeries._make(order, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        if not self.coeffs or not self.coeffs[0]:
            raise DivisionByNonUnit("The constant term of the divisor is zero.")
        inv0 = self.coeffs[0].inverse()
        out = [inv0]
        for k in range(1, self.prec):
            acc = Cyclotomic.zero(self.order)
            for j in range(1, k + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[k - j]
            out.append(-(acc * inv0))
        return QSeries._make(self.order, tuple(out))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Division of a series by zero.")
            return self._scale(Fraction(1) / other)
        if isinstance(other, Cyclotomic):
            return self._scale(other.inverse())
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QSeries.one(self.order, self.prec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # calculus

    def derive(self) -> "QSeries":
        """x d/dx, which keeps the precision."""
        return QSeries._make(self.order, tuple(c * k for k, c in enumerate(self.coeffs)))

    def exp(self) -> "QSeries":
        if self.coeffs and self.coeffs[0]:
            raise ExpOfUnit("exp needs a series with zero constant term.")
        g = self.coeffs
        out = [Cyclotomic.one(self.order)]
        for k in range(1, self.prec):
            acc = Cyclotomic.zero(self.order)
            for j in range(1, k + 1):
                if g[j]:
                    acc = acc + g[j] * out[k - j] * j
            out.append(acc / k)
        return QSeries._make(self.order, tuple(out[: self.prec]))

    def log(self) -> "QSeries":
        if not self.coeffs or self.coeffs[0] != 1:
            raise DivisionByNonUnit("log needs a series with constant term 1.")
        f = self.coeffs
        out = [Cyclotomic.zero(self.order)]
        for k in range(1, self.prec):
            acc = f[k] * k
            for j in range(1, k):
                if out[j]:
                    acc = acc - out[j] * f[k - j] * j
            out.append(acc / k)
        return QSeries._make(self.order, tuple(out))

    # inspection

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def leading_order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None when zero to precision."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def evaluate(self, q: complex) -> complex:
        total = 0j
        power = 1 + 0j
        for c in self.coeffs:
            if c:
                total += c.to_complex() * power
            power *= q
        return total

    def galois(self, u: int) -> "QSeries":
        return QSeries._make(self.order, tuple(c.galois(u) for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = QSeries.constant(self.order, other, self.prec)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        return self.order == other.order and self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None

    def to_strings(self) -> List[List[str]]:
        return [c.to_strings() for c in self.coeffs]

    def __repr__(self):
        return f"<QSeries order={self.order} prec={self.prec}>"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                body = str(c)
                terms.append(body if k == 0 else f"({body})*q^{k}")
        return " + ".join(terms) + f" + O(q^{self.prec})" if terms else f"O(q^{self.prec})"


def qseries_arith(a: QSeries, b: Optional[QSeries], kind: str) -> QSeries:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "inv":
        return a.inverse()
    if kind == "derive":
        return a.derive()
    if kind == "exp":
        return a.exp()
    if kind == "log":
        return a.log()
    raise ValueError(f"Unknown series operation {kind!r}.")
