import pytest

import acceptance_log
from domcycle.catalog import ForbiddenCatalog, cycle_graph, path_graph
from domcycle.graph import Graph

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
]


@pytest.fixture(scope="session")
def catalog():
    return ForbiddenCatalog()


@pytest.fixture
def petersen():
    return Graph.from_edges(10, PETERSEN_EDGES)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p5():
    return path_graph(5)


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(acceptance_log.RESULTS):
        ok, title, detail = acceptance_log.RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
