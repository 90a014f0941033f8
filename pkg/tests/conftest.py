import pytest

from dplattice.enumeration import catalog
from dplattice import weyl


@pytest.fixture(scope="session")
def cat7():
    return catalog(7)


@pytest.fixture(scope="session")
def group(cat7):
    return weyl.generate_group(cat7)


@pytest.fixture(scope="session")
def deltas(cat7, group):
    return weyl.delta_sets(cat7, group)
