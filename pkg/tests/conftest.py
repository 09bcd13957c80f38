import pytest

_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    """Collects one summary line per acceptance criterion for the report."""
    return _acceptance_lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
