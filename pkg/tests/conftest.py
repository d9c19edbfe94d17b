import pytest

from ratliff_rush import oracle
from ratliff_rush.ideals import RelativeIdeal
from ratliff_rush.semigroup import NumericalSemigroup

CORPUS_SEED = 20240601
CORPUS_SIZE = 500


def make_ideal(sgp, gens):
    return RelativeIdeal.from_generators(NumericalSemigroup.from_generators(sgp), gens)


@pytest.fixture(scope="session")
def corpus():
    """500 seeded (semigroup generators, ideal generators) pairs."""
    return oracle.corpus(CORPUS_SIZE, CORPUS_SEED)


@pytest.fixture(scope="session")
def corpus_ideals(corpus):
    return [make_ideal(sg, ig) for sg, ig in corpus]


@pytest.fixture
def S6911():
    return NumericalSemigroup.from_generators([6, 9, 11])


@pytest.fixture
def S4511():
    return NumericalSemigroup.from_generators([4, 5, 11])


@pytest.fixture
def S456():
    return NumericalSemigroup.from_generators([4, 5, 6])


@pytest.fixture
def S457():
    return NumericalSemigroup.from_generators([4, 5, 7])


# Acceptance summary: test_acceptance.py appends (criterion, passed, detail).
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
