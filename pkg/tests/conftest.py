import pytest

from nilharm import catalog as cat
from nilharm import orbits as ob
from nilharm import pedersen as pe
from nilharm import twist as tw
from nilharm.grids import Grid


@pytest.fixture(scope="session")
def h3():
    return cat.heisenberg3()


@pytest.fixture(scope="session")
def h3_orbit(h3):
    return ob.standard_orbit(h3)


@pytest.fixture(scope="session")
def h3_twist(h3_orbit):
    return tw.from_orbit(h3_orbit)


@pytest.fixture(scope="session")
def ext7_orbit():
    return ob.standard_orbit(cat.extended_g0st(1, 1))


@pytest.fixture(scope="session")
def grid64():
    return Grid(2, 8.0, 64)


@pytest.fixture(scope="session")
def engine64(h3_twist, grid64):
    return pe.HeisenbergRealization(h3_twist, grid64)


@pytest.fixture(scope="session")
def grid32():
    return Grid(2, 8.0, 32)
