from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exactnum import QSeries
from ..matroid import Configuration

Row = Tuple[QSeries, QSeries, QSeries]


class PsiMatrix:
    """The n rows of the modular realization, each a projective point over Q(ζ_n)((q))."""

    def __init__(self, n: int, qprec: int, rows: Sequence[Row], **kwargs) -> None:
        self.n = n
        self.qprec = qprec
        self.rows: List[Row] = [tuple(r) for r in rows]
        self.kwargs = kwargs

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, k: int) -> Row:
        return self.rows[k % self.n]

    def entry(self, k: int, column: int) -> QSeries:
        return self[k][column]

    def a(self, k: int) -> QSeries:
        return self[k][1]

    def b(self, k: int) -> QSeries:
        return self[k][2]

    def constant_config(self) -> Configuration:
        """The q^0 terms: the configuration at the cusp at infinity."""
        return Configuration(
            ([x[0] for x in row] for row in self.rows), field=f"cyclotomic:{self.n}"
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "qprec": self.qprec,
            "rows": [[x.to_strings() for x in row] for row in self.rows],
        }

    def __repr__(self):
        return f"<PsiMatrix n={self.n} qprec={self.qprec}>"


class SpanSolution:
    """Rational weights on the numerators of a_k and b_k reproducing a σ-combination."""

    def __init__(
        self,
        n: int,
        qprec: int,
        a_weights: Dict[int, Fraction],
        b_weights: Dict[int, Fraction],
        residual_order: Optional[int] = None,
        **kwargs,
    ) -> None:
        self.n = n
        self.qprec = qprec
        self.a_weights = a_weights
        self.b_weights = b_weights
        self.residual_order = residual_order
        self.kwargs = kwargs

    @property
    def exact(self) -> bool:
        return self.residual_order is None

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "qprec": self.qprec,
            "a": {str(k): str(v) for k, v in sorted(self.a_weights.items()) if v},
            "b": {str(k): str(v) for k, v in sorted(self.b_weights.items()) if v},
            "residual_order": self.residual_order,
        }

    def __repr__(self):
        terms = sum(1 for v in self.a_weights.values() if v)
        terms += sum(1 for v in self.b_weights.values() if v)
        return f"<SpanSolution n={self.n} terms={terms} exact={self.exact}>"
