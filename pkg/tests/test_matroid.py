import random
from fractions import Fraction
from itertools import permutations

import pytest

from modmat.errors import (
    DegenerateFrame,
    ExcludedParameter,
    LabelOutOfRange,
    NotEquivalent,
    SizeMismatch,
    ZeroPoint,
)
from modmat.exactnum import Cyclotomic, Matrix
from modmat.matroid import (
    FRAME,
    Configuration,
    Matroid3,
    apply_transform,
    check_realization,
    det3,
    dual_lines,
    frame_transform,
    is_proportional,
    normalize_frame,
    normalize_point,
    projective_equivalence,
    small_family,
    special_family,
    special_matroids,
    tn_matroid,
)

ADMISSIBLE = [2, 3, Fraction(5, 7), Fraction(-2, 3), 11]


def test_tn_matroid_small():
    m = tn_matroid(7)
    assert m.ground_size == 7
    assert m.nonbases == {(0, 1, 6), (0, 2, 5), (0, 3, 4), (1, 2, 4), (3, 5, 6)}
    assert m.is_nonbasis((6, 0, 1))
    assert not m.is_nonbasis((0, 1, 2))


@pytest.mark.parametrize("n", range(3, 31))
def test_tn_matroid_counts_every_zero_sum_triple(n):
    m = tn_matroid(n)
    expected = set()
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if (a + b + c) % n == 0:
                    expected.add((a, b, c))
    assert m.nonbases == expected
    for triple in expected:
        assert all(m.is_nonbasis(p) for p in permutations(triple))


def test_matroid_rejects_bad_triples():
    with pytest.raises(LabelOutOfRange):
        Matroid3(4, [(0, 1, 4)])
    with pytest.raises(LabelOutOfRange):
        Matroid3(4, [(0, 1, 1)])


def test_special_matroids():
    t5 = special_matroids("T5'")
    assert t5.ground_size == 7
    assert len(t5.nonbases) == 5
    assert t5.atom_labels == tuple(range(1, 8))
    t6 = special_matroids("T6prime")
    assert t6.ground_size == 15
    # four lines of three atoms and six lines of five atoms
    assert len(t6.nonbases) == 4 + 6 * 10


def test_normalize_point():
    assert normalize_point((0, 2, 4)) == (0, 1, 2)
    with pytest.raises(ZeroPoint):
        normalize_point((0, 0, 0))


@pytest.mark.parametrize("n", [5, 6])
def test_constant_families(n):
    report = check_realization(small_family(n), tn_matroid(n))
    assert report.is_realization, report.to_json()


@pytest.mark.parametrize("n", [7, 8, 9])
@pytest.mark.parametrize("t", ADMISSIBLE)
def test_small_families(n, t):
    report = check_realization(small_family(n, t), tn_matroid(n))
    assert report.is_realization, report.to_json()


@pytest.mark.parametrize("n, t", [(7, 0), (7, 1), (8, 0), (8, 1), (8, -1), (9, 0), (9, 1)])
def test_excluded_parameters(n, t):
    with pytest.raises(ExcludedParameter):
        small_family(n, t)
    report = check_realization(small_family(n, t, validate=False), tn_matroid(n))
    assert report.degenerate_bases
    assert not report.is_realization


@pytest.mark.parametrize("n", [7, 8, 9])
def test_small_families_at_random_parameters(n):
    rng = random.Random(n)
    matroid = tn_matroid(n)
    checked = 0
    while checked < 20:
        t = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        try:
            config = small_family(n, t)
        except ExcludedParameter:
            continue
        report = check_realization(config, matroid)
        assert report.is_realization, (t, report.to_json())
        checked += 1


def test_small_family_range():
    with pytest.raises(LabelOutOfRange):
        small_family(10)


@pytest.mark.parametrize("which", ["T5prime", "T6prime"])
def test_special_families(which):
    report = check_realization(special_family(which, 2), special_matroids(which))
    assert report.is_realization, report.to_json()


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        check_realization(small_family(7, 2), tn_matroid(8))


def test_det3_labels():
    config = Configuration(FRAME)
    assert det3(config, 0, 1, 2) == 1
    with pytest.raises(LabelOutOfRange):
        det3(config, 0, 1, 4)


def test_frame_transform_sends_points_to_frame():
    points = [(1, 2, 3), (0, 1, 5), (2, 0, 1), (1, 1, 0)]
    gamma = frame_transform(points, range(4))
    for p, target in zip(points, FRAME):
        assert is_proportional(gamma.apply(p), target)


def test_degenerate_frame():
    with pytest.raises(DegenerateFrame):
        frame_transform([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], range(4))


def test_normalize_frame_keeps_the_matroid():
    config = Configuration([(2, 1, 1), (1, 3, 0), (0, 1, 1), (1, 2, 3), (5, 2, 3)])
    moved = normalize_frame(config, 0, 1, 2, 3)
    assert moved.points[:4] == FRAME
    assert [bool(det3(moved, *t)) for t in [(0, 1, 4), (1, 2, 4)]] == [
        bool(det3(config, *t)) for t in [(0, 1, 4), (1, 2, 4)]
    ]


def test_projective_equivalence():
    config = small_family(8, 3)
    gamma = Matrix([[1, 2, 0], [0, 1, 1], [1, 0, 3]])
    image = apply_transform(gamma, config)
    found = projective_equivalence(config, image)
    assert found.rows[0][0] == 1
    for p, q in zip(config.points, image.points):
        assert is_proportional(found.apply(p), q)
    with pytest.raises(NotEquivalent):
        projective_equivalence(config, small_family(8, 5))


def test_dual_lines():
    lines = dual_lines(FRAME, [(0, 1), (2, 3)])
    assert is_proportional(lines[0], (0, 0, 1))
    assert is_proportional(lines[1], (1, -1, 0))


def test_configuration_json():
    z = Cyclotomic.zeta(7)
    config = Configuration([(1, z, 0), (0, 1, z * z), (1, 1, 1)])
    data = config.to_json()
    assert data["field"] == "cyclotomic:7"
    assert Configuration.from_json(data) == config
    rational = Configuration([(1, Fraction(1, 3), 2)])
    assert rational.to_json() == {"field": "rational", "points": [["1", "1/3", "2"]]}


def _random_transform(rng):
    while True:
        gamma = Matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        if gamma.det():
            return gamma


@pytest.mark.parametrize("config", [small_family(8, 3), small_family(8, -1, validate=False)])
def test_realization_report_is_projectively_invariant(config):
    rng = random.Random(8)
    matroid = tn_matroid(8)
    before = check_realization(config, matroid)
    for _ in range(5):
        after = check_realization(apply_transform(_random_transform(rng), config), matroid)
        assert after.failed_nonbases == before.failed_nonbases
        assert after.degenerate_bases == before.degenerate_bases


def test_normalize_frame_is_idempotent():
    config = Configuration([(2, 1, 1), (1, 3, 0), (0, 1, 1), (1, 2, 3), (5, 2, 3)])
    once = normalize_frame(config, 0, 1, 2, 3)
    assert normalize_frame(once, 0, 1, 2, 3) == once
    moved = normalize_frame(small_family(9, 2), 4, 6, 1, 7)
    assert normalize_frame(moved, 4, 6, 1, 7) == moved
