import random

import pytest
from hypothesis import strategies as st

from hgraph import HGraph
from hgraph import oracle as O


def to_dense(g):
    """(DenseGraph, ids) with ids[i] the HGraph id of dense vertex i."""
    ids = sorted(g)
    idx = {v: i for i, v in enumerate(ids)}
    return O.DenseGraph(len(ids), [(idx[a], idx[b]) for a, b in g.edges()]), ids


def from_dense(dg):
    return HGraph.from_edges(dg.edges(), range(dg.n))


def relabel(found, ids):
    return {tuple(sorted(ids[i] for i in t)) for t in found}


def random_graph(n, p, seed):
    return from_dense(O.gen_random(n, p, seed))


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return O.DenseGraph(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
