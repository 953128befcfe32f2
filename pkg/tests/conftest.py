import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from edgebetti.graph import Graph, complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph

DATA = Path(__file__).parent / "data"


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def two_k2():
    return disjoint_union(complete_graph(2), complete_graph(2))


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def edgeless3():
    return empty_graph(3)


@pytest.fixture(scope="session")
def n7_corpus_path():
    return DATA / "graphs_n7.g6"
