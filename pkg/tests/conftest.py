import time

import pytest

TABLE_SIZE = 3000
_SESSION_START = time.perf_counter()
ACCEPTANCE_LINES: list[str] = []
RUNTIME_TEST = "test_criterion_10_suite_runtime"


def _tables(size):
    f = [0, 1]
    l = [2, 1]
    for _ in range(size - 1):
        f.append(f[-1] + f[-2])
        l.append(l[-1] + l[-2])
    return f, l


FIB_TABLE, LUCAS_TABLE = _tables(TABLE_SIZE)


@pytest.fixture(scope="session")
def F():
    """F[n] by the plain additive recurrence, n <= TABLE_SIZE."""
    return FIB_TABLE


@pytest.fixture(scope="session")
def L():
    return LUCAS_TABLE


def session_elapsed() -> float:
    return time.perf_counter() - _SESSION_START


def pytest_collection_modifyitems(session, config, items):
    # the whole-suite runtime criterion must run last
    last = [it for it in items if it.name == RUNTIME_TEST]
    rest = [it for it in items if it.name != RUNTIME_TEST]
    items[:] = rest + last


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
