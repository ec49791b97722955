import random

import pytest

ACCEPTANCE_LINES = []


def record(criterion, ok, detail=""):
    """Log one acceptance line; the summary hook prints them after the run."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria (exact)")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
