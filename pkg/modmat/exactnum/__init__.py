from .bivariate import BiPoly, BiRat, primitive_triple
from .cyclotomic import Cyclotomic, Rational, cyclotomic_polynomial, euler_phi
from .linalg import Matrix, cross, det3, dot, linear_solve, nullspace
from .series import QSeries, qseries_arith

__all__ = [
    "BiPoly",
    "BiRat",
    "Cyclotomic",
    "Matrix",
    "QSeries",
    "Rational",
    "cross",
    "cyclotomic_polynomial",
    "det3",
    "dot",
    "euler_phi",
    "linear_solve",
    "nullspace",
    "primitive_triple",
    "qseries_arith",
]
