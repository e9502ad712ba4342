import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from slo.objectives import ObjectiveSpec, Sense  # noqa: E402

_ACCEPTANCE_LINES: list[str] = []


def neg_square(point):
    return -sum(v * v for v in point)


@pytest.fixture
def parabola():
    """f(x) = -x^2 on [-1, 1], maximized."""
    return ObjectiveSpec("neg_square", neg_square, ((-1.0, 1.0),), sense=Sense.MAXIMIZE,
                         known_optimum_value=0.0, known_optimum_points=((0.0,),))


@pytest.fixture
def bowl():
    """f(x, y) = -(x^2 + y^2) on [-1, 1]^2, maximized."""
    return ObjectiveSpec("bowl", neg_square, ((-1.0, 1.0), (-1.0, 1.0)), sense=Sense.MAXIMIZE,
                         known_optimum_value=0.0, known_optimum_points=((0.0, 0.0),))


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))


@pytest.fixture(scope="session")
def acceptance_report():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
