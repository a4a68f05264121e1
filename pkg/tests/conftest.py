from itertools import combinations

import pytest
from hypothesis import strategies as st

from symset.graph import NEG, POS, SignedGraph


def graph(n, spec=""):
    """Compact builder: ``graph(3, "0+1 1-2")``."""
    edges = []
    for tok in spec.split():
        sign = POS if "+" in tok else NEG
        u, v = tok.replace("+", " ").replace("-", " ").split()
        edges.append((int(u), int(v), sign))
    return SignedGraph(n, edges)


@st.composite
def signed_graphs(draw, min_n=0, max_n=6, digons=False):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u, v in combinations(range(n), 2):
        kind = draw(st.sampled_from(("none", "+", "-", "both") if digons else ("none", "+", "-")))
        if kind in ("+", "both"):
            edges.append((u, v, POS))
        if kind in ("-", "both"):
            edges.append((u, v, NEG))
    return SignedGraph(n, edges)


@st.composite
def graph_and_subset(draw, **kw):
    g = draw(signed_graphs(**kw))
    x = draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    return g, x


@pytest.fixture
def triangle_one_negative():
    return graph(3, "0+1 1+2 0-2")
