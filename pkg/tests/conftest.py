import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from pointpartition.graph import MultiGraph, build_graph, cycle, uniform_inflation

sys.path.insert(0, str(Path(__file__).parent))


def reference_graph():
    """G*: a 5-cycle whose pair {1,2} is doubled."""
    return build_graph(5, [(1, 2, 2), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 5, 1)])


@pytest.fixture
def gstar():
    return reference_graph()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c5x2():
    return uniform_inflation(cycle(5), 2)


@st.composite
def multigraphs(draw, max_n=6, max_mu=2, min_n=0):
    n = draw(st.integers(min_n, max_n))
    mult = {}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            m = draw(st.integers(0, max_mu))
            if m:
                mult[(u, v)] = m
    return MultiGraph(n, mult)
