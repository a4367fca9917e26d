from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from gainrank.gains import RationalAngle
from gainrank.graph import GainGraph, UndirectedGraph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def R(p, q=1):
    return RationalAngle(p, q)


@st.composite
def gain_graphs(draw, max_n=8, qs=(1, 2, 4, 8, 12), min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    q = draw(st.sampled_from(qs))
    edges = [(u, v, R(draw(st.integers(0, q - 1)), q)) for (u, v), keep in zip(pairs, mask) if keep]
    return GainGraph.from_edges(range(n), edges)


@st.composite
def exact_gain_graphs(draw, max_n=8):
    return draw(gain_graphs(max_n=max_n, qs=(1, 2, 4)))


def graph(n, edges):
    return UndirectedGraph(range(n), [tuple(sorted(e)) for e in edges])


def gain_cycle(angles):
    """Cycle 0..p-1 with gain angles (as Fractions or (p,q) pairs) on edges i -> i+1."""
    return GainGraph.cycle([a if isinstance(a, RationalAngle) else R(*a) for a in angles])


@pytest.fixture
def c4_type_b():
    return gain_cycle([(1, 2), (0, 1), (0, 1), (0, 1)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
