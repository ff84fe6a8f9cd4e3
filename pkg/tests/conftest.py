import pytest

from algcomplete.catalog import build_catalog, cyclic, dihedral, symmetric
from algcomplete.groups import direct_product, group_from_permutations


@pytest.fixture(scope="session")
def catalog():
    return build_catalog(24)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return symmetric(4)


@pytest.fixture(scope="session")
def D5():
    return dihedral(5)


@pytest.fixture(scope="session")
def Z2():
    return cyclic(2)


@pytest.fixture(scope="session")
def Z3():
    return cyclic(3)


@pytest.fixture(scope="session")
def Z4():
    return cyclic(4)


@pytest.fixture(scope="session")
def V4():
    return dihedral(2)


@pytest.fixture(scope="session")
def Z2xS3(Z2, S3):
    G, _, _ = direct_product(Z2, S3, name="Z2xS3")
    return G
