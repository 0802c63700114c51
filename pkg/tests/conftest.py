from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chiforge.graph import Graph, complement, new_graph
from chiforge.patterns import PatternId, pattern_graph

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("CHIFORGE_HYPOTHESIS_EXAMPLES", "150")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


def cycle(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def clique(n: int) -> Graph:
    return new_graph(n, [(i, j) for j in range(n) for i in range(j)])


def edgeless(n: int) -> Graph:
    return new_graph(n)


NAMED = {
    "K1": clique(1),
    "K4": clique(4),
    "K5": clique(5),
    "C4": cycle(4),
    "C5": cycle(5),
    "P4": path(4),
    "2K2": pattern_graph(PatternId.TWO_K2),
    "W4": pattern_graph(PatternId.WHEEL4),
    "gem": pattern_graph(PatternId.GEM),
    "diamond": pattern_graph(PatternId.DIAMOND),
    "HVN": pattern_graph(PatternId.HVN),
    "K5-e": pattern_graph(PatternId.K5_MINUS_E),
    "paraglider": pattern_graph(PatternId.PARAGLIDER),
    "C7-bar": complement(cycle(7)),
}


@pytest.fixture
def named():
    return NAMED


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def two_k2_free_graphs(draw, min_n: int = 1, max_n: int = 14) -> Graph:
    from chiforge.generators import random_2k2_free

    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_2k2_free(n, seed)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
