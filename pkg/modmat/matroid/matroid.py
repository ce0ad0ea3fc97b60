import logging
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple

from ..errors import (
    DegenerateFrame,
    LabelOutOfRange,
    NoFrame,
    NotEquivalent,
    SizeMismatch,
)
from ..exactnum import Matrix, cross, det3 as _det3, linear_solve
from .objects import Configuration, Matroid3, Point, RealizationReport

log = logging.getLogger("modmat.matroid")

# 0-based non-bases of the seven atom matroid; atom k is label k - 1.
_T5_PRIME = ((0, 5, 6), (1, 2, 6), (1, 3, 5), (2, 4, 5), (3, 4, 6))
_T6_PRIME_BLOCKS = (
    (1, 12, 13),
    (3, 6, 15),
    (3, 8, 12),
    (5, 8, 10),
    (1, 2, 3, 4, 5),
    (1, 6, 7, 8, 9),
    (2, 6, 10, 11, 12),
    (3, 7, 10, 13, 14),
    (4, 8, 11, 13, 15),
    (5, 9, 12, 14, 15),
)


def tn_matroid(n: int) -> Matroid3:
    """Triples of residues mod n summing to zero."""
    if n < 3:
        raise LabelOutOfRange(f"T_n needs n >= 3, got {n}.")
    nonbases = [t for t in combinations(range(n), 3) if sum(t) % n == 0]
    return Matroid3(n, nonbases, name=f"T{n}")


def special_matroids(which: str) -> Matroid3:
    key = which.lower().replace("'", "prime").replace("_", "")
    if key == "t5prime":
        return Matroid3(7, _T5_PRIME, atom_labels=range(1, 8), name="T5prime")
    if key == "t6prime":
        nonbases = set()
        for block in _T6_PRIME_BLOCKS:
            nonbases.update(combinations(sorted(x - 1 for x in block), 3))
        return Matroid3(15, nonbases, atom_labels=range(1, 16), name="T6prime")
    raise LabelOutOfRange(f"Unknown special matroid {which!r}.")


def det3(config: Configuration, a: int, b: int, k: int):
    for label in (a, b, k):
        if not 0 <= label < len(config):
            raise LabelOutOfRange(f"Label {label} is not in 0..{len(config) - 1}.")
    return _det3((config.points[a], config.points[b], config.points[k]))


def check_realization(config: Configuration, matroid: Matroid3) -> RealizationReport:
    if len(config) != matroid.ground_size:
        raise SizeMismatch(
            f"Configuration has {len(config)} points but the matroid has {matroid.ground_size}."
        )
    failed, degenerate = [], []
    for triple in combinations(range(len(config)), 3):
        vanishes = not det3(config, *triple)
        if triple in matroid.nonbases:
            if not vanishes:
                failed.append(triple)
        elif vanishes:
            degenerate.append(triple)
    log.debug(
        f"Checked {len(config)} points against {matroid!r}: "
        f"{len(failed)} failed non-bases, {len(degenerate)} degenerate bases."
    )
    return RealizationReport(failed, degenerate, field=config.field)


def frame_transform(points: Sequence[Point], labels: Sequence[int]) -> Matrix:
    """Projective map taking the four labelled points to (1:0:0), (0:1:0), (0:0:1), (1:1:1)."""
    if len(labels) != 4:
        raise DegenerateFrame("A projective frame needs exactly four labels.")
    p1, p2, p3, p4 = (points[j] for j in labels)
    columns = Matrix([p1, p2, p3]).transpose()
    if not columns.det():
        raise DegenerateFrame(f"The first three frame points {tuple(labels[:3])} are collinear.")
    weights = linear_solve(columns, Matrix.column_vector(p4)).column(0)
    if not all(weights):
        raise DegenerateFrame(f"The frame points {tuple(labels)} are not in general position.")
    scaled = Matrix([[columns[i, j] * weights[j] for j in range(3)] for i in range(3)])
    return scaled.inverse()


def normalized_transform(matrix: Matrix) -> Matrix:
    lead = next(x for row in matrix.rows for x in row if x)
    return Matrix([[x / lead for x in row] for row in matrix.rows])


def apply_transform(matrix: Matrix, config: Configuration) -> Configuration:
    return Configuration((matrix.apply(p) for p in config.points), field=config.field)


def normalize_frame(config: Configuration, j1: int, j2: int, j3: int, j4: int) -> Configuration:
    transform = frame_transform(config.points, (j1, j2, j3, j4))
    return apply_transform(transform, config)


def is_proportional(u: Sequence[Any], v: Sequence[Any]) -> bool:
    return not any(cross(u, v))


def general_position_quadruple(config: Configuration) -> Optional[Tuple[int, int, int, int]]:
    for quad in combinations(range(len(config)), 4):
        if all(det3(config, *t) for t in combinations(quad, 3)):
            return quad
    return None


def projective_equivalence(a: Configuration, b: Configuration) -> Matrix:
    """The transformation γ, first nonzero entry 1, with γ·a = b label by label."""
    if len(a) != len(b):
        raise SizeMismatch(f"Configurations have {len(a)} and {len(b)} points.")
    quad = general_position_quadruple(a)
    if quad is None:
        raise NoFrame("No four points of the first configuration are in general position.")
    to_frame_a = frame_transform(a.points, quad)
    try:
        to_frame_b = frame_transform(b.points, quad)
    except DegenerateFrame as exc:
        raise NotEquivalent(f"Frame {quad} is degenerate in the target: {exc.message}") from exc
    gamma = normalized_transform(to_frame_b.inverse() @ to_frame_a)
    for label, (p, q) in enumerate(zip(a.points, b.points)):
        if not is_proportional(gamma.apply(p), q):
            raise NotEquivalent(f"Point {label} is not carried onto its counterpart.")
    return gamma


def dual_lines(points: Sequence[Point], pairs: Sequence[Tuple[int, int]]) -> List[Point]:
    """Lines through the given pairs of points, as dual points."""
    return [cross(points[i], points[j]) for i, j in pairs]
