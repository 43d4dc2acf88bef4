import pytest

from orthoguard.terrain import build_terrain

VALLEY = [(0, 2), (1, 2), (1, 0), (3, 0), (3, 2), (4, 2)]
STAIRS = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)]
FLAT = [(0, 0), (5, 0)]
# two wells separated by a tall tower; exercises guard reuse and retirement
WELLS = [
    (0, 10), (0, 6), (2, 6), (2, 3), (4, 3), (4, 0), (6, 0), (6, 4), (8, 4), (8, 12), (10, 12),
    (10, 20), (12, 20), (12, 14), (14, 14), (14, 4), (16, 4), (16, 10), (18, 10), (18, 20), (20, 20),
]


@pytest.fixture
def valley():
    return build_terrain(VALLEY)


@pytest.fixture
def stairs():
    return build_terrain(STAIRS)


@pytest.fixture
def flat():
    return build_terrain(FLAT)


@pytest.fixture
def wells():
    return build_terrain(WELLS)


def one_based(xs):
    return sorted(i + 1 for i in xs)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
