import pytest

from models import SPACE_SERIES, TIME_SERIES


@pytest.fixture
def time_series():
    return TIME_SERIES


@pytest.fixture
def space_series():
    return SPACE_SERIES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT):
            terminalreporter.write_line(line)
