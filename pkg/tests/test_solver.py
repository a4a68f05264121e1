import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph, signed_graphs
from symset.colors import SelfInverse, Signed, SymColoring, SymSet, is_proper
from symset.constructions import (
    all_negative,
    complete_graph,
    cycle_graph,
    path_graph,
    signed_circuit,
    signed_complete,
    turan_witness,
)
from symset.graph import SignedGraph, frustration_index, is_antibalanced
from symset.solver import (
    BudgetExhausted,
    InadmissibleT,
    SolverBudget,
    brute_chi_mod,
    brute_chi_pm,
    brute_t_chromatic,
    chi_mod,
    chi_pm,
    chromatic_number,
    connectivity_order,
    critical_vertex_set,
    enumerate_colorings,
    find_coloring,
    find_critical_subgraph,
    greedy_symset_coloring,
    symset_chromatic,
    symset_t_chromatic,
)

NEG_K3 = all_negative(complete_graph(3))


def test_chromatic_number_examples():
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(turan_witness(3, 1)) == 3
    assert chromatic_number(SignedGraph(0)) == 0
    assert chromatic_number(SignedGraph(3)) == 1


def test_chromatic_number_collapses_digons():
    assert chromatic_number(graph(2, "0+1 0-1")) == 2


@pytest.mark.parametrize(
    "g,t,value",
    [
        (complete_graph(6), 2, 6),
        (complete_graph(6), 3, 7),
        (cycle_graph(5), 0, 4),
        (all_negative(complete_graph(5)), 0, 2),
        (all_negative(complete_graph(5)), 3, 5),
        (all_negative(cycle_graph(5)), 1, 3),
    ],
)
def test_t_chromatic_anchor_values(g, t, value):
    r = symset_t_chromatic(g, t)
    assert r.value == value
    assert r.value == r.t_used + 2 * r.k_used
    assert is_proper(g, r.witness) and r.witness.symset == SymSet(r.t_used, r.k_used)


def test_t_chromatic_rejects_large_t():
    with pytest.raises(InadmissibleT):
        symset_t_chromatic(cycle_graph(4), 3)


def test_symset_chromatic_examples():
    r = symset_chromatic(NEG_K3)
    assert (r.value, r.t_used) == (2, 0)
    for g in (complete_graph(5), cycle_graph(5), turan_witness(3, 3)):
        assert symset_chromatic(g).value == chromatic_number(g)


def test_antibalanced_nonbipartite_is_two():
    g = SignedGraph(5, [(0, 1, -1), (1, 2, -1), (2, 0, -1), (2, 3, 1), (3, 4, -1), (4, 2, 1)])
    assert is_antibalanced(g) and not g.is_bipartite()
    assert symset_chromatic(g).value == 2
    assert find_coloring(g, 1, 0) is None


@given(signed_graphs(max_n=5, digons=True))
@settings(max_examples=120, deadline=None)
def test_solver_matches_brute_force(g):
    chi = chromatic_number(g)
    for t in range(chi + 1):
        assert symset_t_chromatic(g, t).value == brute_t_chromatic(g, t)


@given(signed_graphs(max_n=6, digons=True))
@settings(max_examples=100, deadline=None)
def test_parity_bound_and_sym_bound(g):
    chi = chromatic_number(g)
    for t in range(chi + 1):
        v = symset_t_chromatic(g, t).value
        assert v % 2 == t % 2
        assert v <= 2 * chi - t
        if chi >= 1 and t == chi - 1:
            assert v == chi + 1
    assert symset_chromatic(g).value <= chi


@given(signed_graphs(max_n=6))
@settings(max_examples=80, deadline=None)
def test_maximal_t_witness_pair_classes_non_bipartite(g):
    r = symset_chromatic(g)
    assert r.k_used <= frustration_index(g)
    classes = {}
    for v, c in enumerate(r.witness.colors):
        if isinstance(c, Signed):
            classes.setdefault(c.j, []).append(v)
    assert len(classes) == r.k_used
    assert all(not g.induced(cls).is_bipartite() for cls in classes.values())


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted):
        symset_t_chromatic(complete_graph(7), 0, SolverBudget(node_limit=5))
    with pytest.raises(ValueError):
        SolverBudget(node_limit=0)


# greedy


def test_greedy_isolated_vertices():
    c = greedy_symset_coloring(SignedGraph(4), 1, [3, 1, 0, 2])
    assert set(c.colors) == {SelfInverse(1)} and c.symset.size == 1


def test_greedy_path_two_self_inverse():
    p3 = path_graph(3)
    c = greedy_symset_coloring(p3, 2, connectivity_order(p3, 0))
    assert is_proper(p3, c) and c.symset == SymSet(2, 0)


def _lemma_order(g):
    low = min(range(g.n), key=g.degree)
    return connectivity_order(g, low)


@given(signed_graphs(min_n=1, max_n=7), st.integers(0, 4))
@settings(max_examples=200, deadline=None)
def test_greedy_sound_and_bounded(g, t):
    order = list(range(g.n))
    c = greedy_symset_coloring(g, t, order)
    assert is_proper(g, c)
    delta = g.max_degree()
    assert c.symset.size <= t + 2 * max(0, -(-(delta + 1 - t) // 2))
    if g.is_connected() and not g.is_regular() and (delta - t) % 2 == 0 and t <= delta:
        assert greedy_symset_coloring(g, t, _lemma_order(g)).symset.size <= delta


def test_connectivity_order_examples():
    star = graph(4, "0+1 0+2 0+3")
    order = connectivity_order(star, 0)
    assert order[-1] == 0 and sorted(order[:-1]) == [1, 2, 3]
    assert connectivity_order(path_graph(3), 0) == [2, 1, 0]
    with pytest.raises(ValueError):
        connectivity_order(SignedGraph(2), 0)


@given(signed_graphs(min_n=1, max_n=7))
@settings(max_examples=100)
def test_connectivity_order_property(g):
    if not g.is_connected():
        return
    for last in range(g.n):
        order = connectivity_order(g, last)
        assert order[-1] == last and sorted(order) == list(range(g.n))
        for i, v in enumerate(order[:-1]):
            assert any(g.adjacent(v, w) for w in order[i + 1 :])


# enumeration


def test_enumerate_counts():
    assert len(list(enumerate_colorings(SignedGraph(1), 1, 0))) == 1
    assert len(list(enumerate_colorings(complete_graph(2), 2, 0))) == 2
    # brute force over {+s, -s}^3: a negative edge forces equal colors
    assert len(list(enumerate_colorings(NEG_K3, 0, 1))) == 2


@given(signed_graphs(max_n=4, digons=True), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_enumerate_matches_product_filter(g, t, k):
    from itertools import product

    s = SymSet(t, k)
    brute = {combo for combo in product(s.colors(), repeat=g.n) if is_proper(g, SymColoring(combo, s))}
    got = [c.colors for c in enumerate_colorings(g, t, k)]
    assert len(got) == len(set(got)) and set(got) == brute
    dedup = list(enumerate_colorings(g, t, k, dedup=True))
    assert (len(dedup) == 0) == (len(brute) == 0)


# critical subgraphs (oracle: exhaustive search over induced subgraphs)


def test_critical_k4_is_triangle():
    h = find_critical_subgraph(complete_graph(4), 0)
    assert h == complete_graph(3)


def test_critical_all_negative_is_single_vertex():
    assert find_critical_subgraph(all_negative(complete_graph(4)), 0) == SignedGraph(1)


def test_critical_balanced_c5_is_itself():
    c5 = signed_circuit(5, True)
    assert critical_vertex_set(c5, 0) == [0, 1, 2, 3, 4]


@given(signed_graphs(min_n=1, max_n=6))
@settings(max_examples=60, deadline=None)
def test_critical_subgraph_every_deletion_drops_by_two(g):
    t = min(1, chromatic_number(g))
    target = symset_t_chromatic(g, t).value
    h = find_critical_subgraph(g, t)
    assert symset_t_chromatic(h, t, strict=False).value == target
    for v in range(h.n):
        assert symset_t_chromatic(h.delete_vertex(v), t, strict=False).value == target - 2


# chi_pm / chi_mod


def test_chi_pm_examples():
    assert chi_pm(NEG_K3) == 2
    assert chi_pm(complete_graph(6)) == 6
    assert chi_pm(SignedGraph(1)) == 1


def test_chi_mod_examples():
    assert chi_mod(complete_graph(3)) == 3 == brute_chi_mod(complete_graph(3))
    assert chi_mod(NEG_K3) == 3 == brute_chi_mod(NEG_K3)
    assert chi_mod(complete_graph(2)) == 2
    assert chi_mod(SignedGraph(3)) == 1


def test_chi_pm_k6_against_integer_brute_force():
    # M_6 = {±1, ±2, ±3} suffices and M_5 does not
    assert brute_chi_pm(complete_graph(6)) == 6


@given(signed_graphs(max_n=4, digons=True))
@settings(max_examples=80, deadline=None)
def test_reductions_match_integer_oracles(g):
    assert chi_pm(g) == brute_chi_pm(g)
    assert chi_mod(g) == brute_chi_mod(g)


def test_signed_complete_examples():
    assert symset_t_chromatic(signed_complete(4), 1).value == 5
    assert symset_t_chromatic(signed_complete(4, [(0, 1)]), 0).value <= 4
    assert symset_t_chromatic(signed_complete(3, [(0, 1), (1, 2), (0, 2)]), 0).value == 2
