import pytest

_LINES = []


@pytest.fixture
def report():
    """Record one acceptance line; the summary prints them all at the end."""

    def emit(line):
        _LINES.append(line)
        print(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
