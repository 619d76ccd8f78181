import math

import numpy as np
import pytest

from ghtet.sampling import sample_corpus
from ghtet.tetra import TetConfig

ACCEPTANCE_LINES = []

LN2 = math.log(2.0)


@pytest.fixture(scope="session")
def corpus():
    """105 admissible configs, 7 per type signature, from the default sampler."""
    return sample_corpus(7, seed=0)


@pytest.fixture
def regular_ideal():
    return TetConfig((0, 0, 0, 0), [LN2] * 6)


@pytest.fixture
def regular_finite():
    return TetConfig((1, 1, 1, 1), [1.0] * 6)


@pytest.fixture
def regular_hyperideal():
    return TetConfig((-1, -1, -1, -1), [1.0] * 6)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
