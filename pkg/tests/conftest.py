from fractions import Fraction

import pytest

from boxball.analysis import Analyzer
from boxball.automata import PBBSState
from boxball.curve import build_curve
from boxball.spectral import build_matrix

# The two-soliton state of length 10 used throughout: solitons (1, 2).
EXAMPLE_STATE = ".11...1..."


@pytest.fixture
def example_state():
    return PBBSState.parse(EXAMPLE_STATE)


@pytest.fixture
def example_matrix(example_state):
    return build_matrix(example_state)


@pytest.fixture
def example_curve():
    return build_curve([1, 2], 10)


@pytest.fixture
def analyzer():
    return Analyzer(depth=8, steps=30, stability_window=10, max_m=40)


def F(*values):
    return tuple(Fraction(v) for v in values)
