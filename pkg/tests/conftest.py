import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ifs2 import FirstGenIFS, SecondGenIFS, delta_grid  # noqa: E402

WORKED_PAIRS = [(0.2, 0.0), (0.4, 1.0)]
SYMMETRIC_PAIRS = [(0.3, 0.0), (0.3, 1.0)]
CONNECTED_PAIRS = [(0.5, 0.0), (0.5, 1.0)]
THREE_MAP_PAIRS = [(0.2, 0.0), (0.15, 0.5), (0.25, 1.0)]


@pytest.fixture(scope="session")
def worked_ifs():
    return FirstGenIFS.from_pairs(WORKED_PAIRS)


@pytest.fixture(scope="session")
def worked_system(worked_ifs):
    return SecondGenIFS(0.085, worked_ifs)


@pytest.fixture(scope="session")
def symmetric_ifs():
    return FirstGenIFS.from_pairs(SYMMETRIC_PAIRS)


@pytest.fixture(scope="session")
def connected_ifs():
    return FirstGenIFS.from_pairs(CONNECTED_PAIRS)


@pytest.fixture(scope="session")
def sweep_deltas():
    return delta_grid(0.006, 0.1, 64)


def corpus_systems():
    """Systems exercised by the structural checks."""
    worked = FirstGenIFS.from_pairs(WORKED_PAIRS)
    sym = FirstGenIFS.from_pairs(SYMMETRIC_PAIRS)
    three = FirstGenIFS.from_pairs(THREE_MAP_PAIRS)
    out = [SecondGenIFS(0.085, worked), SecondGenIFS(0.03, worked), SecondGenIFS(0.2, worked)]
    out += [SecondGenIFS(d, sym) for d in delta_grid(0.006, 0.1, 64)]
    out += [SecondGenIFS(d, three) for d in (0.02, 0.05, 0.1)]
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
