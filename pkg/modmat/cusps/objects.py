from math import gcd
from typing import Dict, Tuple

from ..errors import InvalidCuspLabel, LevelTooSmall, NotAUnit
from ..exactnum import Matrix
from ..matroid import Configuration


class CuspLabel:
    """A cusp of X_1(n), named by the bottom row (c, d) of a matrix in SL_2(Z)."""

    def __init__(self, n: int, c: int, d: int) -> None:
        if gcd(c, d) != 1:
            raise InvalidCuspLabel(f"({c}, {d}) is not the bottom row of a matrix in SL_2(Z).")
        self.n = n
        self.c = c
        self.d = d

    @property
    def width_class(self) -> int:
        """gcd(c, n), which selects the boundary family."""
        return gcd(self.c, self.n)

    def __repr__(self):
        return f"<CuspLabel n={self.n} c={self.c} d={self.d}>"


class CevaReduction:
    def __init__(
        self,
        config: Configuration,
        transform: Matrix,
        bijection: Dict[int, Tuple[int, int]],
        **kwargs,
    ) -> None:
        self.config = config
        self.transform = transform
        # label -> (coordinate family, l) of the Ceva point it lands on
        self.bijection = bijection
        self.kwargs = kwargs

    def __repr__(self):
        return f"<CevaReduction points={len(self.bijection)}>"


def check_unit(n: int, a: int) -> None:
    if gcd(a, n) != 1:
        raise NotAUnit(f"{a} is not a unit modulo {n}.")


def check_level(n: int, minimum: int = 10) -> None:
    if n < minimum:
        raise LevelTooSmall(f"This construction needs n >= {minimum}, got {n}.")
