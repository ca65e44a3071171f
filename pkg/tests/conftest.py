import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_makereport(item, call):
    if call.when != "call":
        return
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        number, text = mark.args
        _CRITERIA.append((number, text, call.excinfo is None))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, ok in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {text}")


@pytest.fixture(scope="session")
def rr15():
    from rainbowcert import round_robin

    return round_robin(15)


@pytest.fixture(scope="session")
def diff4():
    from rainbowcert import difference_coloring

    return difference_coloring(4)
