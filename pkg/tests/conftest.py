import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def report_line():
    """Record one criterion verdict; it is printed now and again in the summary."""
    def emit(line: str) -> None:
        print(line)
        ACCEPTANCE_LINES.append(line)
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
