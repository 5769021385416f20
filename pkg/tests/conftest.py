import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kmweights.fixtures import named  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture
def A2():
    return named("A2")


@pytest.fixture
def B2():
    return named("B2")


@pytest.fixture
def G2():
    return named("G2")


@pytest.fixture
def A1():
    return named("A1")


@pytest.fixture
def A1xA1():
    return named("A1xA1")


@pytest.fixture
def affA1():
    return named("affineA1")


@pytest.fixture
def hyp():
    return named("hyperbolic3")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
