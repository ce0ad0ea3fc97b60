from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ExcludedParameter
from ..exactnum import BiPoly, BiRat, primitive_triple

Point = Tuple[Any, Any, Any]
Exponent = Tuple[int, int, int]

# x1^3 > x1^2 x2 > x1^2 x3 > x1 x2^2 > ... > x3^3
MONOMIALS: Tuple[Exponent, ...] = (
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
)

_S, _T = BiPoly.gens()
# polynomials in s, t that the chain construction keeps dividing out
TRIAL_FACTORS = (_S, _T, _S - 1, _T - 1, 1 + _S - _T, 1 - _T + _S * _T, _S - _T)


class ChainParams:
    """The two parameters s, t of the chain, from any exact field."""

    def __init__(self, s, t, *, validate: bool = True) -> None:
        self.s = as_field(s)
        self.t = as_field(t)
        if validate:
            self.validate()

    @classmethod
    def symbolic(cls) -> "ChainParams":
        s, t = BiRat.gens()
        return cls(s, t)

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.s, BiRat) or isinstance(self.t, BiRat)

    def conditions(self) -> Dict[str, Any]:
        s, t = self.s, self.t
        return {
            "s": s,
            "s - 1": s - 1,
            "t - 1": t - 1,
            "1 + s - t": 1 + s - t,
            "1 - t + s*t": 1 - t + s * t,
            "s - t": s - t,
        }

    def validate(self) -> None:
        for name, value in self.conditions().items():
            if not value:
                raise ExcludedParameter(f"The chain needs {name} != 0.")

    def __repr__(self):
        return f"<ChainParams s={self.s} t={self.t}>"


def as_field(value):
    return Fraction(value) if isinstance(value, int) else value


def tidy(point: Sequence[Any]) -> Point:
    """A representative of the projective point with small coordinates."""
    if any(isinstance(x, BiRat) for x in point):
        coords = [x if isinstance(x, BiRat) else BiRat(x) for x in point]
        return tuple(BiRat(p) for p in primitive_triple(coords, TRIAL_FACTORS))
    lead = next((x for x in point if x), None)
    if lead is None:
        return tuple(point)
    return tuple(x / lead for x in point)


class CubicForm:
    """A ternary cubic, as a map from exponent triples to coefficients."""

    def __init__(self, coeffs: Dict[Exponent, Any]) -> None:
        self.coeffs = {k: v for k, v in coeffs.items() if v}
        if not self.coeffs:
            raise ValueError("A cubic form cannot be identically zero.")

    def coefficient(self, monomial: Exponent):
        return self.coeffs.get(monomial, 0)

    def coefficient_vector(self) -> List[Any]:
        return [self.coefficient(m) for m in MONOMIALS]

    def map_coefficients(self, func: Callable[[Any], Any]) -> "CubicForm":
        return CubicForm({k: func(v) for k, v in self.coeffs.items()})

    def evaluate(self, point: Sequence[Any]):
        powers = [_powers(x) for x in point]
        total = 0
        for (a, b, c), coeff in self.coeffs.items():
            term = _mul(_mul(powers[0][a], powers[1][b]), powers[2][c])
            if term is not None:
                total = total + term * coeff
        return total

    def gradient(self, point: Sequence[Any]) -> Point:
        powers = [_powers(x) for x in point]
        out = []
        for var in range(3):
            total = 0
            for exponent, coeff in self.coeffs.items():
                e = exponent[var]
                if not e:
                    continue
                lowered = list(exponent)
                lowered[var] -= 1
                i, j, k = lowered
                term = _mul(_mul(powers[0][i], powers[1][j]), powers[2][k])
                if term is not None:
                    total = total + term * coeff * e
            out.append(total)
        return tuple(out)

    def to_json(self, encode: Callable[[Any], Any]) -> Dict[str, Any]:
        return {"".join(map(str, m)): encode(self.coefficient(m)) for m in MONOMIALS}

    def __repr__(self):
        return f"<CubicForm terms={len(self.coeffs)}>"


def _powers(x) -> List[Optional[Any]]:
    # None stands for an exact zero so that any ring can skip it
    if not x:
        return [1, None, None, None]
    square = x * x
    return [1, x, square, square * x]


def _mul(a, b):
    if a is None or b is None:
        return None
    if isinstance(a, int) and a == 1:
        return b
    if isinstance(b, int) and b == 1:
        return a
    return a * b


class ChainWindow:
    def __init__(self, params: ChainParams, points: Dict[int, Point]) -> None:
        self.params = params
        self.points = dict(sorted(points.items()))

    @property
    def kmin(self) -> int:
        return min(self.points)

    @property
    def kmax(self) -> int:
        return max(self.points)

    def __getitem__(self, k: int) -> Point:
        return self.points[k]

    def __contains__(self, k: int) -> bool:
        return k in self.points

    def labels(self) -> Iterable[int]:
        return self.points.keys()

    def __repr__(self):
        return f"<ChainWindow range=[{self.kmin}, {self.kmax}] params={self.params!r}>"

