import pytest

from modmat.cusps import (
    CONIC_MONOMIALS,
    CuspLabel,
    boroczky_config,
    boroczky_conic,
    ceva_config,
    ceva_reduction,
    cusp_config,
    cusp_limit_config,
    fourm_config,
    galois_transport,
    sigma_at_cusp,
)
from modmat.errors import (
    DegenerateLevel,
    InvalidCuspLabel,
    LevelTooSmall,
    NotAUnit,
    ZeroIndex,
)
from modmat.exactnum import Cyclotomic
from modmat.matroid import check_realization, tn_matroid


def _evaluate(conic, point):
    total = 0
    for (a, b, c), coeff in conic.items():
        total = total + coeff * point[0] ** a * point[1] ** b * point[2] ** c
    return total


@pytest.mark.parametrize("a", [1, 3, 7, 9])
def test_cusp_config_realizes_tn(a):
    report = check_realization(cusp_config(10, a), tn_matroid(10))
    assert report.is_realization, report.to_json()


@pytest.mark.slow
@pytest.mark.parametrize("n", range(10, 21))
def test_cusp_config_realizes_tn_for_every_level(n):
    assert check_realization(cusp_config(n, 1), tn_matroid(n)).is_realization


def test_cusp_config_frame():
    config = cusp_config(11, 1)
    assert config[0] == (1, 0, 0)
    assert config[1] == (0, 1, 0)
    assert config[2] == (0, 0, 1)
    assert config[8] == (0, 1, 1)
    assert config.field == "cyclotomic:11"


def test_galois_transport_moves_between_units():
    assert galois_transport(cusp_config(11, 1), 3) == cusp_config(11, 3)


def test_generic_cusp_limit_is_the_torsion_configuration():
    assert cusp_limit_config(10, 0, 1) == cusp_config(10, 1)


def test_sigma_at_cusp():
    assert sigma_at_cusp(10, 3, 5, 1) == Cyclotomic.constant(10, 0)
    x = Cyclotomic.zeta(10, 3)
    assert sigma_at_cusp(10, 3, 0, 1) == (x + 1) / (2 * (x - 1))
    with pytest.raises(ZeroIndex):
        sigma_at_cusp(10, 20, 0, 1)


def test_boroczky_is_the_half_level_limit():
    assert cusp_limit_config(12, 6, 1) == boroczky_config(12, 1)


def test_boroczky_shape():
    n = 14
    config = boroczky_config(n, 1)
    report = check_realization(config, tn_matroid(n))
    assert report.nonbases_vanish
    assert report.degenerate_bases
    conic = boroczky_conic(n, 1)
    assert set(conic) <= set(CONIC_MONOMIALS)
    for k in range(1, n, 2):
        assert not _evaluate(conic, config[k]), k
    for k in range(0, n, 2):
        if k not in (2, n - 3):
            assert config[k][1] == 0, k


def test_ceva_is_the_third_level_limit():
    assert cusp_limit_config(12, 4, 1) == ceva_config(12, 1)


def test_ceva_reduction():
    reduction = ceva_reduction(12, 1)
    assert sorted(reduction.bijection) == list(range(12))
    assert len(set(reduction.bijection.values())) == 12
    assert reduction.kwargs["tried"] >= 1


def test_fourm_is_degenerate():
    report = check_realization(fourm_config(12, 1), tn_matroid(12))
    assert report.nonbases_vanish
    assert report.degenerate_bases


def test_quarter_level_limit_is_undefined():
    with pytest.raises(DegenerateLevel):
        cusp_limit_config(12, 3, 1)


@pytest.mark.parametrize(
    "build, n", [(boroczky_config, 15), (ceva_config, 14), (fourm_config, 14)]
)
def test_boundary_needs_a_divisible_level(build, n):
    with pytest.raises(DegenerateLevel):
        build(n, 1)


def test_cusp_errors():
    with pytest.raises(NotAUnit):
        cusp_config(10, 4)
    with pytest.raises(LevelTooSmall):
        cusp_config(9, 1)
    with pytest.raises(InvalidCuspLabel):
        CuspLabel(10, 2, 4)
    assert CuspLabel(12, 4, 1).width_class == 4
