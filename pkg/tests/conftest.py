import pytest
from hypothesis import settings

from tutteforge.matroid import GroundSet, validate_prematroid

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def family(labels, *bases):
    """Pre-matroid on ``labels`` from basis strings like "12", "" for the empty set."""
    g = GroundSet.of(labels)
    return validate_prematroid(g, [list(b) for b in bases])


@pytest.fixture
def u23():
    return family("123", "12", "13", "23")


@pytest.fixture
def two_blocks():
    """{{1,2},{3,4}}: fails the exchange property."""
    return family("1234", "12", "34")


@pytest.fixture
def free3():
    return family("123", "123")


@pytest.fixture
def rank0():
    return family("1", "")


def pytest_terminal_summary(terminalreporter, config):
    lines = config.__dict__.get("acceptance_lines")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
