import logging
from itertools import combinations
from typing import Any, Callable, Dict, List, Sequence, Tuple

from ..errors import ExcludedParameter, LabelOutOfRange
from .matroid import dual_lines
from .objects import Configuration

log = logging.getLogger("modmat.matroid")

FRAME = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def _points_5(t) -> List[Tuple]:
    return [(0, 1, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]


def _points_6(t) -> List[Tuple]:
    return [(1, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1), (1, 1, 1), (1, 1, 0)]


def _points_7(t) -> List[Tuple]:
    return list(FRAME) + [(0, 1, 1), (1, 0, t), (t - 1, t, 0)]


def _points_8(t) -> List[Tuple]:
    return [
        (1, 0, 0),
        (0, 1, 0),
        (1, 1, 1),
        (0, 0, 1),
        (0, t, -1),
        (1, 0, 1),
        (1, t, t),
        (1, t, 0),
    ]


def _points_9(t) -> List[Tuple]:
    return [
        (1, 0, 0),
        (0, 1, 0),
        (1, 1, 1),
        (0, 0, 1),
        (t, t, t - 1),
        (0, t, t - 1),
        (1, 0, 1),
        (1, t, t),
        (1, t, 0),
    ]


# Each family lists polynomials in t whose zeros are excluded parameters.
_SMALL: Dict[int, Tuple[Callable[[Any], List[Tuple]], Tuple[Callable[[Any], Any], ...]]] = {
    5: (_points_5, ()),
    6: (_points_6, ()),
    7: (_points_7, (lambda t: t, lambda t: t - 1)),
    8: (_points_8, (lambda t: t, lambda t: t - 1, lambda t: t + 1)),
    9: (_points_9, (lambda t: t, lambda t: t - 1, lambda t: t * t - t + 1)),
}

_SPECIAL_EXCLUDED = {
    "T5prime": (lambda t: t, lambda t: t - 1, lambda t: t + 1),
    "T6prime": (
        lambda t: t + 1,
        lambda t: t,
        lambda t: 2 * t + 1,
        lambda t: t - 1,
        lambda t: t * t + t + 1,
        lambda t: t * t - t - 1,
    ),
}


def _check_excluded(name: str, t, polys: Sequence[Callable[[Any], Any]]) -> None:
    for poly in polys:
        if not poly(t):
            raise ExcludedParameter(f"Parameter {t} is excluded for the {name} family.")


def small_family(n: int, t=0, *, validate: bool = True) -> Configuration:
    """The closed-form T_n realization at parameter t.

    With validate=False an excluded t is accepted and yields a degenerate configuration.
    """
    if n not in _SMALL:
        raise LabelOutOfRange(f"Closed-form families exist for n in 5..9, got {n}.")
    points, excluded = _SMALL[n]
    if validate:
        _check_excluded(f"T{n}", t, excluded)
    return Configuration(points(t))


def _canonical(which: str) -> str:
    key = which.lower().replace("'", "prime").replace("_", "")
    if key not in ("t5prime", "t6prime"):
        raise LabelOutOfRange(f"Unknown special matroid {which!r}.")
    return "T5prime" if key == "t5prime" else "T6prime"


def t6_base_points(t) -> List[Tuple]:
    return [(0, 0, 1), (0, 1, 0), (-1, 1, 1), (t, 0, 1), (-t, 1, 0), (-t - 1, 1, 1)]


def special_family(which: str, t) -> Configuration:
    name = _canonical(which)
    _check_excluded(name, t, _SPECIAL_EXCLUDED[name])
    if name == "T5prime":
        return Configuration(
            list(FRAME) + [(t + 1, 1, 1 - t * t), (t + 1, 1, t + 1), (0, 1, t + 1)]
        )
    # atom k + 1 is the line through the k-th pair of points, pairs in lexicographic order
    pairs = list(combinations(range(6), 2))
    return Configuration(dual_lines(t6_base_points(t), pairs))
