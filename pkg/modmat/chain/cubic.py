import logging
from typing import Any

from ..errors import DenominatorVanishes, PoleOfParametrization
from .objects import ChainParams, CubicForm, Point, as_field

log = logging.getLogger("modmat.chain")


def cubic_through(params: ChainParams) -> CubicForm:
    """The cubic through p_{-3}, ..., p_5, which then passes through every chain point."""
    s, t = params.s, params.t
    return CubicForm(
        {
            (2, 1, 0): -(s * s),
            (1, 2, 0): s,
            (2, 0, 1): s * t,
            (1, 1, 1): s * s - s - t,
            (0, 2, 1): 1 - s,
            (1, 0, 2): t * (1 - s),
            (0, 1, 2): s - 1,
        }
    )


def cubic_gradient(cubic: CubicForm, point: Point) -> Point:
    return cubic.gradient(point)


def node_residual(params: ChainParams):
    """Vanishes exactly when the cubic through the chain is singular."""
    s, t = params.s, params.t
    s2 = s * s
    return -9 * s + 3 * s2 + 5 * s2 * s + s2 * s2 + t + 10 * s * t - 11 * s2 * t - t * t


def singular_point(params: ChainParams) -> Point:
    s, t = params.s, params.t
    base = 4 - s + s * s - 3 * t
    if not base or not (s - 1):
        raise DenominatorVanishes("The singular point formula has a vanishing denominator.")
    second = (3 * s + 4 * s * s + s * s * s + t - 8 * s * t) / base
    third = (5 * s - 6 * s * s + s * s * s - t + 2 * s * t) / ((s - 1) * base)
    return (base / base, second, third)


def param_r(r) -> ChainParams:
    """A rational parametrization of the node locus."""
    r = as_field(r)
    den = 5 * r * r - 1
    if not den:
        raise PoleOfParametrization(f"5r^2 - 1 vanishes at r = {r}.")
    s = (r * r - 1) / den
    t = 8 * (r - 3 * r * r + 4 * r ** 4) / (den * den)
    return ChainParams(s, t)


def _w_denominator(w) -> Any:
    w2 = w * w
    return 1 + 10 * w2 + 5 * w2 * w2


def param_w(w) -> ChainParams:
    """The double cover of the node locus that separates the two branches at the node."""
    w = as_field(w)
    h = _w_denominator(w)
    if not h:
        raise PoleOfParametrization(f"1 + 10w^2 + 5w^4 vanishes at w = {w}.")
    w2 = w * w
    s = (w2 - 1) * (3 + w2) / h
    t = 32 * w2 * w2 * (1 + w2) * (3 + w2) / (h * h)
    return ChainParams(s, t)


def smooth_param(v, w) -> Point:
    """Homogeneous point of the nodal cubic at param_w(w) with multiplicative coordinate v.

    v = 1 is p_0 and v = ((w - 1)/(w + 1))^k is p_k.
    """
    w2 = w * w
    b1 = 1 + v - w + v * w
    h = _w_denominator(w)
    e1 = 2 * (1 + w2) * (-1 + v + 2 * w + 2 * v * w - w2 + v * w2)
    g = -1 - v - 3 * w + 3 * v * w - 3 * w2 - 3 * v * w2 - w2 * w + v * w2 * w
    a = (
        4
        * (v - 1)
        * (w - 1)
        * w2
        * (1 + w)
        * (3 + w2)
        * (-1 + v - 2 * w - 2 * v * w - w2 + v * w2)
    )
    c = (v - 1) * (w - 1) ** 2 * (1 + w) ** 2 * (-1 - v - w + v * w) * (3 + w2)
    point = (b1 * h * e1 * g, a * e1, c * b1 * h)
    if not any(point):
        raise DenominatorVanishes(f"Every coordinate vanishes at v = {v}, w = {w}.")
    return point
