import pytest

from kacdem.cartan import build_datum, coweight_lattice
from kacdem.weyl import weyl_group

SMALL_TYPES = ("A1~1", "A2~1", "A2~2")


@pytest.fixture(scope="session")
def A1():
    return weyl_group(build_datum("A1~1"))


@pytest.fixture(scope="session")
def A2():
    return weyl_group(build_datum("A2~1"))


@pytest.fixture(scope="session")
def A2t():
    return weyl_group(build_datum("A2~2"))


def g_coweight(group, *coords):
    """Class in the group's lattice of the g-coweight sum coords[j] omega_{j+1}^vee."""
    return coweight_lattice(group.datum, group.lattice.kind).from_g_omega(coords)
