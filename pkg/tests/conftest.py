import pytest

from rigcomplete.examples import BOOL_RIG, Z2_RING, discrete_rig, finite_sets_E, free_modules_F2


@pytest.fixture(scope="session")
def boolrig():
    return discrete_rig(BOOL_RIG)


@pytest.fixture(scope="session")
def z2():
    return discrete_rig(Z2_RING)


@pytest.fixture(scope="session")
def E():
    return finite_sets_E()


@pytest.fixture(scope="session")
def F2():
    return free_modules_F2(2)
