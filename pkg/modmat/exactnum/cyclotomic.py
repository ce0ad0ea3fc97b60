import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..errors import FieldMismatch, NotAUnit

log = logging.getLogger("modmat.exactnum")

# The base field. Fraction already keeps gcd(num, den) = 1 with a positive denominator.
Rational = Fraction

Scalar = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divide_monic(num: List[int], den: Sequence[int]) -> List[int]:
    num = list(num)
    dd = len(den) - 1
    quotient = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quotient[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quotient


@lru_cache(maxsize=None)
def phi_coefficients(n: int) -> Tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError(f"Cyclotomic polynomials need n >= 1, got {n}.")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _divide_monic(poly, phi_coefficients(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(phi_coefficients(n)) - 1


def cyclotomic_polynomial(n: int):
    """Φ_n as a polynomial in the first indeterminate."""
    from .bivariate import BiPoly

    return BiPoly.from_univariate(phi_coefficients(n))


def reduce_mod_phi(poly: List, n: int) -> List:
    """Remainder of ``poly`` modulo Φ_n, padded to exactly φ(n) entries."""
    phi = phi_coefficients(n)
    deg = len(phi) - 1
    poly = list(poly)
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    poly[base + j] -= c * phi[j]
    out = poly[:deg]
    out.extend([0] * (deg - len(out)))
    return out


def integral_form(coeffs: Iterable[Fraction]) -> Tuple[List[int], int]:
    coeffs = list(coeffs)
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = _lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def int_poly_mul(a: Sequence[int], b: Sequence[int], out: List[int] = None) -> List[int]:
    if out is None:
        out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    size = max(len(a), len(b))
    out = [Fraction(0)] * size
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    quotient = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c / lead
            quotient[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return _trim(quotient), _trim(a[:db])


@lru_cache(maxsize=None)
def _zeta_power(n: int, k: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in reduce_mod_phi([0] * k + [1], n))


class Cyclotomic:
    """An element of ℚ(ζ_n), stored as its remainder modulo Φ_n.

    ``coeffs[i]`` is the coefficient of ζ^i. The representation is canonical, so equality is
    coefficient-wise and elements are hashable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        deg = euler_phi(order)
        values = [Fraction(c) for c in coeffs]
        if len(values) > deg:
            values = reduce_mod_phi(values, order)
        values.extend([Fraction(0)] * (deg - len(values)))
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in values)

    @classmethod
    def _make(cls, order: int, coeffs: Tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, order: int, value: Scalar) -> "Cyclotomic":
        deg = euler_phi(order)
        return cls._make(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls.constant(order, 0)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.constant(order, 1)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclotomic":
        return cls._make(order, _zeta_power(order, k % order))

    @classmethod
    def from_strings(cls, order: int, values: Sequence[str]) -> "Cyclotomic":
        return cls(order, [Fraction(v) for v in values])

    # coercion

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise FieldMismatch(
                    f"Cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})."
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.constant(self.order, other)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._make(self.order, (self.coeffs[0] + other,) + self.coeffs[1:])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        values = zip(self.coeffs, other.coeffs)
        return Cyclotomic._make(self.order, tuple(a + b for a, b in values))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._make(self.order, (self.coeffs[0] - other,) + self.coeffs[1:])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        values = zip(self.coeffs, other.coeffs)
        return Cyclotomic._make(self.order, tuple(a - b for a, b in values))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._make(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, da = integral_form(self.coeffs)
        b, db = integral_form(other.coeffs)
        product = reduce_mod_phi(int_poly_mul(a, b), self.order)
        den = da * db
        return Cyclotomic._make(self.order, tuple(Fraction(c, den) for c in product))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("Zero has no inverse in a cyclotomic field.")
        modulus = [Fraction(c) for c in phi_coefficients(self.order)]
        r0, r1 = modulus, _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        # invariant: s_i * self == r_i modulo Φ_n
        while len(r1) > 1:
            quotient, remainder = _poly_divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quotient, s1))
        c = r1[0]
        return Cyclotomic(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Division of a cyclotomic element by zero.")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparisons

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    # field structure

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def galois(self, u: int) -> "Cyclotomic":
        """Image under the automorphism ζ ↦ ζ^u."""
        if gcd(u, self.order) != 1:
            raise NotAUnit(f"{u} is not a unit modulo {self.order}.")
        acc = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, z in enumerate(_zeta_power(self.order, (u * i) % self.order)):
                    if z:
                        acc[j] += c * z
        return Cyclotomic._make(self.order, tuple(acc))

    def to_complex(self) -> complex:
        deg = len(self.coeffs)
        roots = np.exp(2j * np.pi * np.arange(deg) / self.order)
        values = np.array([float(c) for c in self.coeffs])
        return complex(np.dot(values, roots))

    def to_strings(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "z" if i == 1 else f"z^{i}"
                parts.append(power if c == 1 else f"({c})*{power}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<Cyclotomic order={self.order} coeffs=[{', '.join(self.to_strings())}]>"
