import itertools

import pytest
from hypothesis import strategies as st

from cartdom.graph import Graph, has_isolated_vertex
from cartdom.harness import FamilySpec, generate_family


def family(name: str, n: int) -> Graph:
    return generate_family(FamilySpec(name, n))


@pytest.fixture(scope="session")
def K2():
    return family("complete", 2)


@pytest.fixture(scope="session")
def P3():
    return family("path", 3)


@pytest.fixture(scope="session")
def P4():
    return family("path", 4)


@pytest.fixture(scope="session")
def C4():
    return family("cycle", 4)


@st.composite
def graphs(draw, min_order=1, max_order=8, isolated_free=False):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])
    if isolated_free:
        # attach each isolated vertex to its successor (or predecessor)
        extra = [(v, (v + 1) % n) for v in range(n) if g.adjacency[v] == 0]
        g = Graph.from_edges(n, list(g.edges()) + extra)
        assert not has_isolated_vertex(g)
    return g


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
