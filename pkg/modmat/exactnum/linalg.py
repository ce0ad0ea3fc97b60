import logging
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from ..errors import DimensionMismatch, NoSolution
from .bivariate import BiPoly

log = logging.getLogger("modmat.exactnum")


def _exact_div(a, b):
    if isinstance(b, int) and b == 1:
        return a
    if isinstance(a, BiPoly):
        quotient = a.divide_exact(b)
        if quotient is None:
            raise ArithmeticError("Fraction-free elimination produced an inexact division.")
        return quotient
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _lift(value):
    # keeps integer matrices in Q instead of float
    return Fraction(value) if isinstance(value, int) else value


class Matrix:
    """A rectangular matrix with entries from one exact ring."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Any]]):
        rows = tuple(tuple(row) for row in rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise DimensionMismatch("Matrix rows must all have the same length.")
        self.rows = rows

    @classmethod
    def identity(cls, size: int, one=1, zero=0) -> "Matrix":
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def column_vector(cls, values: Iterable[Any]) -> "Matrix":
        return cls([[v] for v in values])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self.rows[i][j]
        return self.rows[index]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    def delete_column(self, j: int) -> "Matrix":
        return Matrix(row[:j] + row[j + 1 :] for row in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.shape[1] != other.shape[0]:
            raise DimensionMismatch(f"Cannot multiply {self.shape} by {other.shape}.")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            line = []
            for col in cols:
                total = 0
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                line.append(total)
            out.append(line)
        return Matrix(out)

    def apply(self, vector: Sequence[Any]) -> Tuple[Any, ...]:
        if len(vector) != self.shape[1]:
            raise DimensionMismatch("Vector length does not match the matrix.")
        out = []
        for row in self.rows:
            total = 0
            for a, b in zip(row, vector):
                if a and b:
                    total = total + a * b
            out.append(total)
        return tuple(out)

    def scaled(self, factor) -> "Matrix":
        return Matrix([[a * factor for a in row] for row in self.rows])

    def det(self):
        """Determinant by Bareiss elimination; every division is exact."""
        size, cols = self.shape
        if size != cols:
            raise DimensionMismatch("Only square matrices have a determinant.")
        if size == 0:
            return 1
        m = [list(row) for row in self.rows]
        sign = 1
        prev = 1
        for k in range(size - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
                if swap is None:
                    return 0 * m[k][k]
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            pivot = m[k][k]
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    m[i][j] = _exact_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            prev = pivot
        result = m[size - 1][size - 1]
        return result if sign == 1 else -result

    def inverse(self) -> "Matrix":
        size, _ = self.shape
        one = _lift(next((a for row in self.rows for a in row if a), 1))
        one = one / one
        return linear_solve(self, Matrix.identity(size, one, 0 * one))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2)
        )

    __hash__ = None

    def __repr__(self):
        return f"<Matrix shape={self.shape}>"


def _echelon(rows: List[List[Any]], ncols: int) -> List[int]:
    """Row-reduce ``rows`` in place on the first ``ncols`` columns; return pivot columns."""
    nrows = len(rows)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        width = len(rows[r])
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f == 0:
                continue
            for j in range(c, width):
                rows[i][j] = (rows[i][j] * pivot - rows[r][j] * f) / prev
        prev = pivot
        pivots.append(c)
        r += 1
    return pivots


def linear_solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a·x = b for every column of b.

    Bareiss forward elimination, whose divisions by the previous pivot are exact, then back
    substitution with field division. Free variables are set to zero. Raises NoSolution naming
    the first inconsistent row.
    """
    (m, n), (mb, k) = a.shape, b.shape
    if m != mb:
        raise DimensionMismatch(f"Left side has {m} rows but right side has {mb}.")
    rows = [[_lift(x) for x in a.rows[i] + b.rows[i]] for i in range(m)]
    pivots = _echelon(rows, n)
    rank = len(pivots)
    for i in range(rank, m):
        if any(x != 0 for x in rows[i][n:]):
            raise NoSolution(f"The system is inconsistent at reduced row {i}.")
    solution: List[List[Any]] = [[0] * k for _ in range(n)]
    for idx in range(rank - 1, -1, -1):
        c = pivots[idx]
        row = rows[idx]
        for col in range(k):
            total = row[n + col]
            for j in range(c + 1, n):
                if row[j] != 0 and solution[j][col] != 0:
                    total = total - row[j] * solution[j][col]
            solution[c][col] = total / row[c]
    log.debug(f"Solved a {m}x{n} system of rank {rank}.")
    return Matrix(solution)


def nullspace(a: Matrix) -> List[Tuple[Any, ...]]:
    """A basis of the right kernel, one vector per free column."""
    m, n = a.shape
    rows = [[_lift(x) for x in row] for row in a.rows]
    pivots = _echelon(rows, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vector: List[Any] = [0] * n
        vector[f] = Fraction(1)
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            row = rows[idx]
            total = 0
            for j in range(c + 1, n):
                if row[j] != 0 and vector[j] != 0:
                    total = total - row[j] * vector[j]
            vector[c] = total / row[c]
        basis.append(tuple(vector))
    return basis


def det3(rows: Sequence[Sequence[Any]]):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def cross(u: Sequence[Any], v: Sequence[Any]) -> Tuple[Any, Any, Any]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[Any], v: Sequence[Any]):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total
