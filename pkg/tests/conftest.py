import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rdisconnect.graph import enumerate_connected  # noqa: E402
from rdisconnect.rainbow import rd_exact  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def census_graphs():
    """Connected graphs of order 2..6, keyed by order."""
    return {n: enumerate_connected(n) for n in range(2, 7)}


@pytest.fixture(scope="session")
def census_rd(census_graphs):
    return {n: [rd_exact(g) for g in gs] for n, gs in census_graphs.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
