import random
from fractions import Fraction

import pytest

from modmat.chain import (
    MONOMIALS,
    ChainParams,
    base_points,
    chain_extend,
    chord_tangent_add,
    closed_form_points,
    cubic_gradient,
    cubic_through,
    det_of_labels,
    interpolation_matrix,
    interpolation_minor,
    node_residual,
    param_r,
    param_w,
    periodicity_residual,
    singular_point,
    smooth_param,
    third_point,
)
from modmat.cusps import cusp_config
from modmat.errors import (
    ExcludedParameter,
    NonFlexNeutral,
    NotOnCurve,
    SingularInput,
)
from modmat.matroid import is_proportional


@pytest.mark.parametrize("s, t", [(1, 5), (0, 5), (2, 1), (2, 3), (2, 2)])
def test_excluded_chain_parameters(s, t):
    with pytest.raises(ExcludedParameter):
        ChainParams(s, t)


def test_base_points_are_the_frame(params):
    points = base_points(params)
    assert points[0] == (1, 0, 0)
    assert points[3] == (1, 1, 1)
    assert points[-1] == (1, 2, 0)


def test_chain_reproduces_closed_forms(params):
    window = chain_extend(params, -4, 5)
    closed = closed_form_points(params)
    for k, point in closed.items():
        assert is_proportional(window[k], point), k
    assert closed[4] == (1, Fraction(5, 2), Fraction(1, 2))


def test_cubic_vanishes_on_the_chain(params):
    cubic = cubic_through(params)
    window = chain_extend(params, -4, 8)
    assert window.kmin <= -4 and window.kmax >= 8
    for k in window.labels():
        assert cubic.evaluate(window[k]) == 0, k


def test_symbolic_closed_forms():
    params = ChainParams.symbolic()
    cubic = cubic_through(params)
    for k, point in closed_form_points(params).items():
        assert not cubic.evaluate(point), k


def test_interpolation_minors_give_the_cubic(params):
    matrix = interpolation_matrix(params)
    assert matrix.shape == (9, 10)
    cubic = cubic_through(params)
    minors = [interpolation_minor(params, j) * (-1) ** j for j in range(10)]
    coefficients = cubic.coefficient_vector()
    ratio = minors[8] / coefficients[8]
    assert ratio
    assert minors == [c * ratio for c in coefficients]
    assert abs(interpolation_minor(params, 7)) == abs(interpolation_minor(params, 8))
    assert MONOMIALS[8] == (0, 1, 2)


def test_periodicity_residual_is_generically_nonzero(params):
    assert any(periodicity_residual(params, 10))


@pytest.mark.parametrize("r", [2, 3, -2, 4])
def test_param_r_lies_on_the_node_locus(r):
    assert node_residual(param_r(r)) == 0


def test_param_r_rejects_the_diagonal():
    # r = 1/3 lands on s = t = 2
    with pytest.raises(ExcludedParameter):
        param_r(Fraction(1, 3))


@pytest.mark.parametrize("w", [2, 3, Fraction(1, 2), Fraction(-3, 5)])
def test_param_w_lies_on_the_node_locus(w):
    params = param_w(w)
    assert node_residual(params) == 0
    cubic = cubic_through(params)
    node = singular_point(params)
    assert cubic.evaluate(node) == 0
    assert not any(cubic_gradient(cubic, node))


def test_param_w_at_two():
    params = param_w(2)
    assert params.s == Fraction(21, 121)


@pytest.mark.parametrize("v", [3, Fraction(1, 2), Fraction(-5, 4)])
def test_smooth_param_lies_on_the_nodal_cubic(v):
    w = 2
    cubic = cubic_through(param_w(w))
    assert cubic.evaluate(smooth_param(v, w)) == 0


def test_smooth_param_follows_the_chain():
    w = 2
    window = chain_extend(param_w(w), -4, 5)
    v1 = Fraction(w - 1, w + 1)
    for k in window.labels():
        assert is_proportional(smooth_param(v1 ** k, w), window[k]), k


def test_third_point(params):
    cubic = cubic_through(params)
    points = chain_extend(params, -4, 5).points
    assert is_proportional(third_point(cubic, points[1], points[2]), points[-3])
    assert is_proportional(third_point(cubic, points[0], points[0]), points[0])


def test_group_law_errors(params):
    cubic = cubic_through(params)
    points = chain_extend(params, -4, 5).points
    with pytest.raises(NotOnCurve):
        third_point(cubic, (1, 2, 3), points[0])
    with pytest.raises(NonFlexNeutral):
        chord_tangent_add(cubic, points[1], points[2], points[1])
    nodal = cubic_through(param_w(2))
    with pytest.raises(SingularInput):
        third_point(nodal, singular_point(param_w(2)), points[0])


def test_group_law_on_the_cusp_cubic():
    n = 10
    config = cusp_config(n, 1)
    s, t = config[n - 1][1], config[n - 4][1]
    cubic = cubic_through(ChainParams(s, t, validate=False))
    p = config.points
    for k in range(n):
        assert not cubic.evaluate(p[k]), k
    for k in range(n):
        assert is_proportional(chord_tangent_add(cubic, p[k], p[1], p[0]), p[(k + 1) % n]), k
        assert is_proportional(chord_tangent_add(cubic, p[k], p[-k % n], p[0]), p[0]), k


def test_closed_form_determinant(params):
    closed = closed_form_points(params)
    assert det_of_labels(closed, -2, 1, 4) == Fraction(-3, 2)
    symbolic = ChainParams.symbolic()
    s, t = symbolic.s, symbolic.t
    value = det_of_labels(closed_form_points(symbolic), -2, 1, 4)
    assert value == s * (s - t) / ((s - 1) * (t - 1))


def test_group_law_is_commutative_and_associative(params):
    cubic = cubic_through(params)
    window = chain_extend(params, -4, 5)
    o = window[0]
    labels = list(window.labels())
    rng = random.Random(20)

    def add(p, q):
        return chord_tangent_add(cubic, p, q, o)

    for _ in range(20):
        i, j, k = (rng.choice(labels) for _ in range(3))
        p, q, r = window[i], window[j], window[k]
        assert is_proportional(add(p, q), add(q, p)), (i, j)
        assert is_proportional(add(add(p, q), r), add(p, add(q, r))), (i, j, k)
        if i + j in window:
            assert is_proportional(add(p, q), window[i + j]), (i, j)
