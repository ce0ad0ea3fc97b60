from fractions import Fraction

import pytest

from modmat.chain import ChainParams
from modmat.psi import psi_matrix


@pytest.fixture
def params():
    """A generic rational point of the (s, t) plane."""
    return ChainParams(2, 5)


@pytest.fixture(scope="session")
def psi10():
    return psi_matrix(10, 12)


@pytest.fixture
def half():
    return Fraction(1, 2)
