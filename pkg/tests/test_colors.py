import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph, graph_and_subset
from symset.colors import (
    SelfInverse,
    Signed,
    SymColoring,
    SymSet,
    canonicalize,
    color_class_partition,
    is_proper,
    parse_color,
    switch_coloring,
)
from symset.constructions import all_negative, complete_graph, cycle_graph
from symset.graph import switch_at
from symset.solver import chromatic_number, find_coloring, symset_chromatic, symset_t_chromatic

P, M = 1, -1


@pytest.mark.parametrize("t,k", [(0, 0), (3, 0), (0, 2), (2, 3)])
def test_negation_involution_fixed_points(t, k):
    s = SymSet(t, k)
    assert len(s.colors()) == s.size == t + 2 * k
    assert all(-(-c) == c for c in s.colors())
    assert sum(1 for c in s.colors() if -c == c) == t


def test_color_names_round_trip():
    for c in (SelfInverse(3), Signed(2, P), Signed(1, M)):
        assert parse_color(str(c)) == c
    assert str(Signed(2, M)) == "-s_2" and str(SelfInverse(1)) == "0_1"


def test_coloring_rejects_out_of_set_colors():
    with pytest.raises(ValueError):
        SymColoring((SelfInverse(2),), SymSet(1, 0))


def test_is_proper_examples():
    neg_edge = graph(2, "0-1")
    assert not is_proper(neg_edge, SymColoring((SelfInverse(1), SelfInverse(1))))
    neg_k4 = all_negative(complete_graph(4))
    assert is_proper(neg_k4, SymColoring((Signed(1, P),) * 4))
    pos_edge = graph(2, "0+1")
    assert is_proper(pos_edge, SymColoring((Signed(1, P), Signed(1, M))))


def test_is_proper_digon_blocks_both_inverse_and_equal():
    d = graph(2, "0+1 0-1")
    assert not is_proper(d, SymColoring((Signed(1, P), Signed(1, P))))
    assert not is_proper(d, SymColoring((Signed(1, P), Signed(1, M))))
    assert is_proper(d, SymColoring((Signed(1, P), SelfInverse(1))))


def test_is_proper_partial_assignment():
    with pytest.raises(ValueError):
        is_proper(graph(3, "0+1"), SymColoring((SelfInverse(1),)))
    with pytest.raises(ValueError):
        SymColoring.from_mapping({0: SelfInverse(1)}, 2)


def test_switch_coloring_examples():
    c = SymColoring((Signed(2, P), SelfInverse(1)), SymSet(1, 2))
    assert switch_coloring(c, set()) == c
    si = SymColoring((SelfInverse(1), SelfInverse(2)))
    assert switch_coloring(si, {0, 1}) == si
    assert switch_coloring(c, {0})[0] == Signed(2, M)


@given(graph_and_subset(max_n=6, digons=True), st.integers(0, 3))
@settings(max_examples=120, deadline=None)
def test_switching_preserves_propriety(gx, t):
    g, x = gx
    t = min(t, chromatic_number(g))
    c = symset_t_chromatic(g, t).witness
    assert is_proper(switch_at(g, x), switch_coloring(c, x))


@given(graph_and_subset(max_n=6))
@settings(max_examples=80, deadline=None)
def test_self_inverse_chi_coloring_is_proper_for_any_signature(gx):
    g, _ = gx
    chi = chromatic_number(g)
    c = find_coloring(g.underlying(), chi, 0)
    assert c is not None and is_proper(g, c)


def test_partition_balanced_c4():
    c = SymColoring((SelfInverse(1), SelfInverse(2)) * 2)
    rep = color_class_partition(cycle_graph(4), c)
    assert rep.ok and rep.self_inverse == {1: [0, 2], 2: [1, 3]} and rep.pairs == {}


def test_partition_negative_triangle_single_pair_class():
    g = all_negative(complete_graph(3))
    rep = color_class_partition(g, SymColoring((Signed(1, P),) * 3))
    assert rep.ok and rep.pairs == {1: [0, 1, 2]}


def test_partition_k6_minimal_coloring():
    g = complete_graph(6)
    r = symset_t_chromatic(g, 0)
    assert r.value == 6
    rep = color_class_partition(g, r.witness)
    assert rep.ok
    assert sorted(len(v) for v in rep.pairs.values()) == [2, 2, 2]
    for members in rep.pairs.values():
        colors = {r.witness[v] for v in members}
        assert colors == {Signed(next(iter(colors)).j, P), Signed(next(iter(colors)).j, M)}


def test_partition_rejects_improper():
    with pytest.raises(ValueError):
        color_class_partition(graph(2, "0+1"), SymColoring((SelfInverse(1),) * 2))


@given(graph_and_subset(max_n=6, digons=True))
@settings(max_examples=80, deadline=None)
def test_partition_of_minimal_coloring_is_structurally_valid(gx):
    g, _ = gx
    assert color_class_partition(g, symset_chromatic(g).witness).ok


def test_canonicalize_relabels_by_first_occurrence():
    c = SymColoring((Signed(2, M), SelfInverse(2), Signed(2, P), Signed(1, P)), SymSet(2, 2))
    assert canonicalize(c).colors == (Signed(1, P), SelfInverse(1), Signed(1, M), Signed(2, P))
