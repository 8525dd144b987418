import pytest

from wallman import io


@pytest.fixture(scope="session")
def corpus():
    return {L.name: L for L in io.builtin_corpus()}


@pytest.fixture(scope="session")
def chain3(corpus):
    return corpus["chain3"]


@pytest.fixture(scope="session")
def fivepoint(corpus):
    return corpus["fivepoint"]


@pytest.fixture(scope="session")
def n5(corpus):
    return corpus["n5"]


@pytest.fixture(scope="session")
def m3(corpus):
    return corpus["m3"]


@pytest.fixture(scope="session")
def powerset3(corpus):
    return corpus["powerset3"]


@pytest.fixture(scope="session")
def one_plus_b2(corpus):
    return corpus["one_plus_b2"]
