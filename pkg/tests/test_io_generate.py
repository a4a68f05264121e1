import logging
import random

import pytest
from hypothesis import given

from conftest import signed_graphs
from symset.constructions import signed_expansion, turan_witness
from symset.generate import all_graphs, random_connected_graph
from symset.io import GraphFileError, format_graph, parse_graph


@given(signed_graphs(max_n=7, digons=True))
def test_round_trip(g):
    assert parse_graph(format_graph(g, comment="x")) == g


def test_constructed_graphs_round_trip():
    for g in (turan_witness(3, 1), signed_expansion(turan_witness(2, 0))):
        assert parse_graph(format_graph(g)) == g


def test_parse_comments_and_signs():
    g = parse_graph("# triangle\nv 3\ne 0 1 +\ne 1 2 -  # negative\n\ne 0 2 +\n")
    assert g.n == 3 and g.negative_edges() == [(1, 2)]


def test_duplicate_edge_warns(caplog):
    with caplog.at_level(logging.WARNING):
        g = parse_graph("v 2\ne 0 1 +\ne 1 0 +\n")
    assert g.num_edges == 1 and "duplicate" in caplog.text


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 0 1 +\n", 1),
        ("v 2\ne 0 0 +\n", 2),
        ("v 2\ne 0 1 x\n", 2),
        ("v 2\n# c\ne 0 5 +\n", 3),
        ("v 2\nv 3\n", 2),
        ("v two\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFileError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_missing_header():
    with pytest.raises(GraphFileError):
        parse_graph("# nothing\n")


def test_graph_counts_match_known_sequence():
    # non-isomorphic graphs / connected graphs on n vertices
    assert [len(all_graphs(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]
    assert [len(all_graphs(n, connected=True)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_generated_graphs_match_networkx_atlas():
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    ours = []
    for g in all_graphs(5):
        h = nx.Graph()
        h.add_nodes_from(range(5))
        h.add_edges_from(g.pairs)
        ours.append(h)
    atlas = [a for a in nx.graph_atlas_g() if a.number_of_nodes() == 5]
    assert len(ours) == len(atlas)
    for a in atlas:
        assert sum(GraphMatcher(a, h).is_isomorphic() for h in ours) == 1


def test_random_connected_graph():
    rng = random.Random(1)
    for n in range(1, 9):
        assert random_connected_graph(n, rng, p=0.1).is_connected()
