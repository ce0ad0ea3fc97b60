import random
from fractions import Fraction

import pytest

from modmat.errors import (
    DimensionMismatch,
    DivisionByNonUnit,
    ExpOfUnit,
    FieldMismatch,
    NoSolution,
    NotAUnit,
)
from modmat.exactnum import (
    BiPoly,
    BiRat,
    Cyclotomic,
    Matrix,
    QSeries,
    Rational,
    cyclotomic_polynomial,
    euler_phi,
    linear_solve,
    nullspace,
    qseries_arith,
)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 5, 10, 12, 13)] == [1, 1, 4, 4, 4, 12]


@pytest.mark.parametrize(
    "n, coeffs", [(1, [-1, 1]), (4, [1, 0, 1]), (12, [1, 0, -1, 0, 1]), (6, [1, -1, 1])]
)
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == BiPoly.from_univariate(coeffs)


def test_zeta_relations():
    z = Cyclotomic.zeta(5)
    assert z ** 5 == 1
    assert sum((z ** k for k in range(5)), Cyclotomic.zero(5)) == 0
    assert Cyclotomic.zeta(4) ** 2 == -1
    assert Cyclotomic.zeta(10, 5) == -1


@pytest.mark.parametrize("n", range(1, 31))
def test_zeta_is_a_root_of_its_cyclotomic_polynomial(n):
    z = Cyclotomic.zeta(n)
    assert z ** n == 1
    assert cyclotomic_polynomial(n).evaluate(z, 0) == 0
    if n > 1:
        assert all(z ** k != 1 for k in range(1, n))


def _random_rational(rng):
    return Rational(rng.randint(-9, 9), rng.randint(1, 6))


def _random_cyclotomic(rng, n):
    return sum(
        (_random_rational(rng) * Cyclotomic.zeta(n, k) for k in range(n)), Cyclotomic.zero(n)
    )


@pytest.mark.parametrize("n", [0, 5, 7, 12, 15])
def test_field_axioms(n):
    rng = random.Random(n)

    def element():
        return _random_rational(rng) if n == 0 else _random_cyclotomic(rng, n)

    zero, one = (Rational(0), Rational(1)) if n == 0 else (Cyclotomic.zero(n), Cyclotomic.one(n))
    for _ in range(10):
        a, b, c = element(), element(), element()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        assert a - b == a + (-b)
        if a != zero:
            assert a * (one / a) == one
            assert (b / a) * a == b


def test_canonical_representation():
    a = Cyclotomic.zeta(12, 3) * Cyclotomic.zeta(12, 4)
    assert a == Cyclotomic.zeta(12, 7)
    assert hash(a) == hash(Cyclotomic.zeta(12, 7))
    assert hash(Cyclotomic.constant(7, 3)) == hash(Fraction(3))


def test_inverse_and_division():
    x = 1 + Cyclotomic.zeta(7)
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert 1 / Cyclotomic.constant(7, 4) == Fraction(1, 4)
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(7).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Cyclotomic.zeta(5) + Cyclotomic.zeta(7)


def test_galois():
    z = Cyclotomic.zeta(8)
    assert z.galois(3) == Cyclotomic.zeta(8, 3)
    x = 2 + z - z ** 3
    assert x.galois(5).galois(5) == x
    with pytest.raises(NotAUnit):
        z.galois(2)


def test_to_complex():
    value = Cyclotomic.zeta(6).to_complex()
    assert value == pytest.approx(complex(0.5, 3 ** 0.5 / 2))


def test_geometric_series_inverse():
    s = QSeries.one(3, 6) - QSeries.monomial(3, 1, 6)
    assert s.inverse() == QSeries(3, [1] * 6)
    with pytest.raises(DivisionByNonUnit):
        QSeries.monomial(3, 1, 6).inverse()


def test_precision_is_the_minimum():
    total = QSeries.one(3, 4) + QSeries.one(3, 6)
    assert total.prec == 4
    assert (QSeries.one(3, 4) * QSeries.one(3, 6)).prec == 4


def test_exp_and_log():
    q = QSeries.monomial(5, 1, 7)
    e = q.exp()
    factorial = 1
    for k in range(7):
        factorial *= max(k, 1)
        assert e[k] == Fraction(1, factorial)
    assert e.log() == q
    with pytest.raises(ExpOfUnit):
        QSeries.one(5, 7).exp()


def test_derive_and_leading_order():
    s = QSeries(4, [0, 0, 3, 1])
    assert s.leading_order() == 2
    assert s.derive() == QSeries(4, [0, 0, 6, 3])
    assert QSeries.zero(4, 5).leading_order() is None


def test_qseries_arith_dispatch():
    a = QSeries(5, [1, 2, 3])
    b = QSeries(5, [1, 1, 1])
    assert qseries_arith(a, b, "mul") == a * b
    assert qseries_arith(a, b, "div") * b == a
    with pytest.raises(ValueError):
        qseries_arith(a, b, "sqrt")


def test_bipoly_exact_division():
    s, t = BiPoly.gens()
    product = (s - 1) * (t + 2) * (1 + s - t)
    assert product.divide_exact(s - 1) == (t + 2) * (1 + s - t)
    assert (s * s + t).divide_exact(s) is None


def test_birat_cancel():
    s, _ = BiPoly.gens()
    value = BiRat(s * s - 1, s - 1).cancel([s - 1])
    assert value == BiRat(s + 1)
    assert value.den.is_constant()
    assert value.evaluate(Fraction(3), Fraction(0)) == 4


def test_bareiss_determinant():
    m = Matrix([[2, 0, 1], [1, 3, 2], [1, 1, 2]])
    assert m.det() == 6
    assert isinstance(m.det(), Fraction)
    s, t = BiPoly.gens()
    assert Matrix([[s, t], [1, s]]).det() == s * s - t


def test_linear_solve_and_nullspace():
    a = Matrix([[1, 2], [3, 4]])
    x = linear_solve(a, Matrix.column_vector([5, 6]))
    assert x.column(0) == (Fraction(-4), Fraction(9, 2))
    with pytest.raises(NoSolution):
        linear_solve(Matrix([[1, 1], [2, 2]]), Matrix.column_vector([1, 3]))
    (kernel,) = nullspace(Matrix([[1, 1, 0], [0, 1, 1]]))
    assert kernel == (1, -1, 1)


def test_cyclotomic_matrix_inverse():
    z = Cyclotomic.zeta(5)
    m = Matrix([[1, z], [z, 2]])
    one = Cyclotomic.one(5)
    assert m @ m.inverse() == Matrix.identity(2, one, 0 * one)


def test_ragged_matrix():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
