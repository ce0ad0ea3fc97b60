import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

log = logging.getLogger("modmat.exactnum")

Monomial = Tuple[int, int]
Number = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class BiPoly:
    """A polynomial in s and t over ℚ, stored as a sparse map (i, j) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Number]] = None):
        clean = {}
        for key, value in (terms or {}).items():
            value = Fraction(value)
            if value:
                clean[(int(key[0]), int(key[1]))] = value
        self.terms = clean

    @classmethod
    def _make(cls, terms: Dict[Monomial, Fraction]) -> "BiPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, value: Number) -> "BiPoly":
        return cls({(0, 0): value})

    @classmethod
    def gens(cls) -> Tuple["BiPoly", "BiPoly"]:
        return cls({(1, 0): 1}), cls({(0, 1): 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Number]) -> "BiPoly":
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    # arithmetic

    @staticmethod
    def _coerce(other) -> Optional["BiPoly"]:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, value in other.terms.items():
            total = terms.get(key, 0) + value
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return BiPoly._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._make({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly._make({})
            return BiPoly._make({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + a * b
        return BiPoly._make({k: v for k, v in terms.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Polynomials only take non-negative powers.")
        result = BiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def leading(self) -> Tuple[Monomial, Fraction]:
        key = max(self.terms)
        return key, self.terms[key]

    def divide_exact(self, other) -> Optional["BiPoly"]:
        """The quotient self / other when it is a polynomial, otherwise None.

        Division runs in lexicographic order; a leading term that the divisor's leading term
        does not divide means the division is not exact.
        """
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("Polynomial division by zero.")
            return self * (Fraction(1) / other)
        if not other.terms:
            raise ZeroDivisionError("Polynomial division by zero.")
        (gi, gj), gc = other.leading()
        if len(other.terms) == 1:
            out = {}
            for (i, j), c in self.terms.items():
                if i < gi or j < gj:
                    return None
                out[(i - gi, j - gj)] = c / gc
            return BiPoly._make(out)
        remainder = dict(self.terms)
        quotient: Dict[Monomial, Fraction] = {}
        while remainder:
            key = max(remainder)
            i, j = key
            if i < gi or j < gj:
                return None
            factor = remainder[key] / gc
            shift = (i - gi, j - gj)
            quotient[shift] = factor
            for (oi, oj), oc in other.terms.items():
                target = (oi + shift[0], oj + shift[1])
                value = remainder.get(target, 0) - factor * oc
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return BiPoly._make(quotient)

    # structure

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for value in self.terms.values():
            num = gcd(num, value.numerator)
            den = _lcm(den, value.denominator)
        return Fraction(num, den)

    def monomial_gcd(self) -> Monomial:
        if not self.terms:
            return (0, 0)
        return min(i for i, _ in self.terms), min(j for _, j in self.terms)

    def shift(self, di: int, dj: int) -> "BiPoly":
        return BiPoly._make({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def derivative(self, var: int) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            power = (i, j)[var]
            if power:
                key = (i - 1, j) if var == 0 else (i, j - 1)
                out[key] = c * power
        return BiPoly._make(out)

    def evaluate(self, s, t):
        """Substitute values for s and t. Works for any ring that mixes with Fraction."""
        s_powers = {0: 1}
        t_powers = {0: 1}
        total = 0
        for (i, j), c in sorted(self.terms.items()):
            if i not in s_powers:
                s_powers[i] = s ** i
            if j not in t_powers:
                t_powers[j] = t ** j
            total = total + s_powers[i] * t_powers[j] * c
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            monomial = "*".join(
                name if power == 1 else f"{name}^{power}"
                for name, power in (("s", i), ("t", j))
                if power
            )
            if not monomial:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial)
            elif c == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{c}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"<BiPoly {self}>"


def _as_poly(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.constant(value)
    raise TypeError(f"Cannot use {type(value).__name__} as a polynomial.")


def _normalize(num: BiPoly, den: BiPoly) -> Tuple[BiPoly, BiPoly]:
    if not num:
        return num, BiPoly.constant(1)
    ratio = num.content() / den.content()
    num = num * (ratio.numerator / num.content())
    den = den * (ratio.denominator / den.content())
    if den.leading()[1] < 0:
        num, den = -num, -den
    ni, nj = num.monomial_gcd()
    di, dj = den.monomial_gcd()
    ci, cj = min(ni, di), min(nj, dj)
    if ci or cj:
        num, den = num.shift(-ci, -cj), den.shift(-ci, -cj)
    return num, den


class BiRat:
    """A rational function in s and t over ℚ.

    Only the integer content and common monomials are cancelled. Two values are equal when
    their cross products agree, so the class is deliberately unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise ZeroDivisionError("Rational function with zero denominator.")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def gens(cls) -> Tuple["BiRat", "BiRat"]:
        s, t = BiPoly.gens()
        return cls(s), cls(t)

    @staticmethod
    def _coerce(other) -> Optional["BiRat"]:
        if isinstance(other, BiRat):
            return other
        if isinstance(other, (int, Fraction, BiPoly)):
            return BiRat(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return BiRat(self.num + other.num, self.den)
        q = other.den.divide_exact(self.den)
        if q is not None:
            return BiRat(self.num * q + other.num, other.den)
        q = self.den.divide_exact(other.den)
        if q is not None:
            return BiRat(self.num + other.num * q, self.den)
        return BiRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(BiRat)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        num_a, den_b = self.num, other.den
        num_b, den_a = other.num, self.den
        # cancel a denominator against the opposite numerator when it divides exactly
        if not den_b.is_constant():
            q = num_a.divide_exact(den_b)
            if q is not None:
                num_a, den_b = q, BiPoly.constant(1)
        if not den_a.is_constant():
            q = num_b.divide_exact(den_a)
            if q is not None:
                num_b, den_a = q, BiPoly.constant(1)
        return BiRat(num_a * num_b, den_a * den_b)

    __rmul__ = __mul__

    def inverse(self) -> "BiRat":
        if not self.num:
            raise ZeroDivisionError("Zero rational function has no inverse.")
        return BiRat(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return BiRat(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def cancel(self, factors: Iterable[BiPoly]) -> "BiRat":
        """Divide out every listed factor common to numerator and denominator."""
        num, den = self.num, self.den
        for factor in factors:
            while True:
                qn = num.divide_exact(factor)
                if qn is None:
                    break
                qd = den.divide_exact(factor)
                if qd is None:
                    break
                num, den = qn, qd
        return BiRat(num, den)

    def evaluate(self, s, t):
        den = self.den.evaluate(s, t)
        if not den:
            raise ZeroDivisionError("Denominator vanishes at the given point.")
        return self.num.evaluate(s, t) / den

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"<BiRat {self}>"


def primitive_triple(
    coords: Sequence[BiRat], factors: Iterable[BiPoly] = ()
) -> Tuple[BiPoly, ...]:
    """Scale a homogeneous triple to polynomial coordinates without common factors.

    Common content, common monomials and the listed trial factors are removed.
    """
    common = BiPoly.constant(1)
    for c in coords:
        if not c.num:
            continue
        if common.divide_exact(c.den) is None:
            q = c.den.divide_exact(common)
            common = c.den if q is not None else common * c.den
    polys = []
    for c in coords:
        if not c.num:
            polys.append(BiPoly._make({}))
        else:
            polys.append(c.num * common.divide_exact(c.den))
    nonzero = [p for p in polys if p]
    if not nonzero:
        raise ZeroDivisionError("A projective point needs a nonzero coordinate.")
    num = 0
    den = 1
    for p in nonzero:
        content = p.content()
        num = gcd(num, content.numerator)
        den = _lcm(den, content.denominator)
    scale = Fraction(den, num)
    mi = min(p.monomial_gcd()[0] for p in nonzero)
    mj = min(p.monomial_gcd()[1] for p in nonzero)
    polys = [p.shift(-mi, -mj) * scale for p in polys]
    for factor in factors:
        while True:
            quotients = [p.divide_exact(factor) if p else p for p in polys]
            if any(q is None for q in quotients):
                break
            polys = quotients
    lead = next(p for p in polys if p).leading()[1]
    if lead < 0:
        polys = [-p for p in polys]
    return tuple(polys)
