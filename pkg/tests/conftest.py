import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ncbiortho.ring import Quaternion

ACCEPTANCE_LINES = []


def small_fractions(bound=5, den=4):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, den))


def quaternions(bound=4, den=3):
    f = small_fractions(bound, den)
    return st.builds(Quaternion, f, f, f, f)


def nonzero_quaternions(bound=4, den=3):
    return quaternions(bound, den).filter(bool)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
