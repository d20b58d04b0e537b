import pytest

ACCEPT_LINES = []


@pytest.fixture
def report():
    """Record one acceptance line; printed at the end of the run."""
    def _report(k, ok, summary):
        line = f"ACCEPT {k:>2} {'PASS' if ok else 'FAIL'} {summary}"
        ACCEPT_LINES.append((k, line))
        print(line)
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPT_LINES):
            terminalreporter.write_line(line)
