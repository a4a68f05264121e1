import pytest

from symset.constructions import (
    complete_graph,
    cycle_graph,
    signed_circuit,
    signed_complete,
    signed_expansion,
    turan_vertex,
    turan_witness,
)
from symset.graph import NEG, GraphError, is_balanced
from symset.solver import chromatic_number, symset_t_chromatic


def test_signed_expansion_makes_digons():
    assert signed_expansion(complete_graph(2)).edges == ((0, 1, 1), (0, 1, -1))
    pm3 = signed_expansion(complete_graph(3))
    assert pm3.num_edges == 6 and all(pm3.is_digon(u, v) for u, v in pm3.pairs)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_signed_expansion_values(n):
    pm = signed_expansion(complete_graph(n))
    assert [symset_t_chromatic(pm, t).value for t in range(n + 1)] == [2 * n - t for t in range(n + 1)]


def test_turan_structure_k2_t1():
    g = turan_witness(2, 1)
    a1, a2 = turan_vertex(2, 1, 0, 0), turan_vertex(2, 1, 0, 1)
    b1, b2 = turan_vertex(2, 1, 1, 0), turan_vertex(2, 1, 1, 1)
    assert g.n == 4 and g.num_edges == 4
    assert g.negative_edges() == [tuple(sorted((a2, b2)))]
    assert not g.adjacent(a1, a2) and g.adjacent(a1, b2)
    assert symset_t_chromatic(g, 1).value == 3


def test_turan_k3_t1():
    g = turan_witness(3, 1)
    assert g.n == 9 and chromatic_number(g) == 3
    # slots 1 and 2 each form an all-negative triangle
    assert len(g.negative_edges()) == 6
    assert symset_t_chromatic(g, 1).value == 5


@pytest.mark.parametrize("k", [1, 2, 3])
def test_turan_t_equals_k(k):
    assert symset_t_chromatic(turan_witness(k, k), k).value == k


def test_turan_invalid():
    with pytest.raises(GraphError):
        turan_witness(2, 3)


def test_signed_circuit():
    c = signed_circuit(5, True)
    assert is_balanced(c).balanced and symset_t_chromatic(c, 0).value == 4
    u = signed_circuit(4, False)
    assert not is_balanced(u).balanced and len(u.negative_edges()) == 1
    assert symset_t_chromatic(u, 0).value == 4
    for n in range(3, 8):
        for bal in (True, False):
            assert symset_t_chromatic(signed_circuit(n, bal), 1).value == 3
    with pytest.raises(GraphError):
        signed_circuit(2, True)
    assert signed_circuit(6, True) == cycle_graph(6)


def test_signed_complete():
    g = signed_complete(4, [(0, 1)])
    assert [(u, v) for u, v, s in g.edges if s == NEG] == [(0, 1)]
    with pytest.raises(GraphError):
        signed_complete(3, [(0, 5)])
