import logging
from typing import Sequence

from ..errors import DegenerateIntersection, NonFlexNeutral, NotOnCurve, SingularInput
from ..exactnum import cross, dot
from ..matroid import is_proportional
from .objects import CubicForm, Point, tidy

log = logging.getLogger("modmat.chain")


def _check_smooth(cubic: CubicForm, point: Sequence, name: str) -> Point:
    if cubic.evaluate(point):
        raise NotOnCurve(f"{name} does not lie on the cubic.")
    gradient = cubic.gradient(point)
    if not any(gradient):
        raise SingularInput(f"{name} is a singular point of the cubic.")
    return gradient


def third_point(cubic: CubicForm, p: Point, q: Point) -> Point:
    """The third intersection of the line pq with the cubic (the tangent when p = q)."""
    grad_p = _check_smooth(cubic, p, "P")
    if is_proportional(p, q):
        one, zero = _unit(p)
        for axis in range(3):
            basis = [zero, zero, zero]
            basis[axis] = one
            direction = cross(grad_p, basis)
            if any(direction) and not is_proportional(direction, p):
                break
        else:
            raise DegenerateIntersection("Could not find a second point on the tangent line.")
        r = _combine(cubic.evaluate(direction), p, -dot(cubic.gradient(direction), p), direction)
    else:
        grad_q = _check_smooth(cubic, q, "Q")
        r = _combine(dot(grad_q, p), p, -dot(grad_p, q), q)
    if not any(r):
        raise DegenerateIntersection("The line through the two points lies on the cubic.")
    return tidy(r)


def _unit(point: Sequence):
    lead = next(x for x in point if x)
    one = lead / lead
    return one, one - one


def _combine(a, p: Point, b, q: Point) -> Point:
    return tuple(a * x + b * y for x, y in zip(p, q))


def chord_tangent_add(cubic: CubicForm, p: Point, q: Point, o: Point) -> Point:
    """p ⊕ q for the chord-tangent law whose neutral element is the flex o."""
    _check_smooth(cubic, o, "O")
    if not is_proportional(third_point(cubic, o, o), o):
        raise NonFlexNeutral("The neutral point must be a flex of the cubic.")
    _check_smooth(cubic, p, "P")
    _check_smooth(cubic, q, "Q")
    return third_point(cubic, third_point(cubic, p, q), o)
