import pytest

from bihomalg import catalog, prime_field, rationals


@pytest.fixture(scope="session")
def f5():
    return prime_field(5)


@pytest.fixture(scope="session")
def f7():
    return prime_field(7)


@pytest.fixture(scope="session")
def rats():
    return rationals()


@pytest.fixture(scope="session")
def pauli():
    return catalog.build("pauli_f5")


@pytest.fixture(scope="session")
def clock_shift():
    return catalog.build("clock_shift_f7_3")


@pytest.fixture(scope="session")
def twisted():
    return catalog.build("twisted_pauli_f5")


@pytest.fixture(scope="session")
def block_pair():
    return catalog.build("block_pair_f5")


@pytest.fixture(scope="session")
def corner():
    return catalog.build("corner_f5")


@pytest.fixture(scope="session")
def ladder():
    return catalog.build("nilpotent_ladder_f5")
