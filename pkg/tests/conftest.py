import pytest

from iassl.graph import LabeledGraph
from iassl.setalg import GroundSet


@pytest.fixture
def x01():
    return GroundSet((0, 1))


@pytest.fixture
def x012():
    return GroundSet((0, 1, 2))


@pytest.fixture
def p3(x01):
    """P_3 with centre {0} and leaves {1}, {0,1}."""
    return LabeledGraph(3, [(0, 1), (0, 2)], [[0], [1], [0, 1]], ground=x01)


@pytest.fixture
def two_stars(x012):
    """{0} joined to {0,2}, {2}, {0,1,2}; separately {1} joined to {0,1}."""
    labels = [[0], [1], [0, 1], [0, 2], [2], [0, 1, 2]]
    return LabeledGraph(6, [(0, 3), (0, 4), (0, 5), (1, 2)], labels, ground=x012)


@pytest.fixture
def full_star(x012):
    """{0} joined to all of {1}, {0,1}, {0,2}, {2}, {0,1,2}, plus {1}-{0,1}."""
    labels = [[0], [1], [0, 1], [0, 2], [2], [0, 1, 2]]
    return LabeledGraph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)], labels, ground=x012)


@pytest.fixture
def iassi_example(x012):
    """Isolated {0}, {2}, {0,2}, {0,1,2}; one edge {1}-{0,1}."""
    labels = [[0], [2], [0, 2], [0, 1, 2], [1], [0, 1]]
    return LabeledGraph(6, [(4, 5)], labels, ground=x012)


# -- acceptance summary ------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = "PASS" if rep.passed else "FAIL"
        _ACCEPTANCE.append((f"{marker.args[0]:>2}. {marker.args[1]}", status))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {name}")
