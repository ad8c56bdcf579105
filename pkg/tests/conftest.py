import os

import pytest
from hypothesis import HealthCheck, settings

from helpers import ACCEPTANCE_LINES, fixture
from gentle_strings.fileformats import fixture_path, load_curves, load_triangulation

settings.register_profile(
    "repo", deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def algebras():
    return {n: fixture(n) for n in ("A2", "A3", "GA1", "ANN", "SA1")}


@pytest.fixture(scope="session")
def ann_tri():
    return load_triangulation(fixture_path("ANN.tri"))


@pytest.fixture(scope="session")
def ann_curves():
    return load_curves(fixture_path("ANN.curves"))


@pytest.fixture
def update_golden():
    return os.environ.get("UPDATE_GOLDEN") == "1"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
