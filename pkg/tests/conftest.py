import pytest

from chd import (
    AbelianGroup,
    certify,
    character_table,
    cocktail_party,
    complete,
    conference_lift,
    cycle,
    hypercube,
    paley_conference,
    sylvester_hadamard,
)


@pytest.fixture(scope="session")
def f2():
    return sylvester_hadamard(2)


@pytest.fixture(scope="session")
def f4():
    return sylvester_hadamard(4)


@pytest.fixture(scope="session")
def f8():
    return sylvester_hadamard(8)


@pytest.fixture(scope="session")
def t4():
    return character_table((4,))


@pytest.fixture(scope="session")
def h6():
    return conference_lift(paley_conference(5))


@pytest.fixture(scope="session")
def q3():
    return hypercube(3)


@pytest.fixture(scope="session")
def k4():
    return complete(4)


@pytest.fixture(scope="session")
def k4_spectrum(k4, f4):
    return certify(k4, f4)


@pytest.fixture(scope="session")
def q3_spectrum(q3, f8):
    return certify(q3, f8)
