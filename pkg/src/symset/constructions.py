"""Generators for named graphs and signed witness families."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import NEG, POS, GraphError, SignedGraph


def complete_graph(n: int) -> SignedGraph:
    return SignedGraph(n, [(u, v, POS) for u, v in combinations(range(n), 2)])


def cycle_graph(n: int) -> SignedGraph:
    if n < 3:
        raise GraphError("a circuit needs at least 3 vertices")
    return SignedGraph(n, [(i, (i + 1) % n, POS) for i in range(n)])


def path_graph(n: int) -> SignedGraph:
    return SignedGraph(n, [(i, i + 1, POS) for i in range(n - 1)])


def all_negative(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, [(u, v, NEG) for u, v in g.pairs])


def signed_expansion(base: SignedGraph) -> SignedGraph:
    """Replace every edge of ``base`` by a positive/negative digon."""
    return SignedGraph(base.n, [(u, v, s) for u, v in base.pairs for s in (POS, NEG)])


def turan_vertex(k: int, t: int, part: int, slot: int) -> int:
    """Index of the vertex in part ``part`` (0-based) and slot ``slot`` (0-based)."""
    return part * (k - t + 1) + slot


def turan_witness(k: int, t: int) -> SignedGraph:
    """Complete k-partite graph with parts of size k-t+1 reaching chi^t_sym = 2k - t.

    Slot j across all parts forms a K_k; every such clique except slot 0
    is all-negative, every other edge positive.
    """
    if k < 1 or not 0 <= t <= k:
        raise GraphError(f"turan witness needs 0 <= t <= k and k >= 1, got k={k}, t={t}")
    m = k - t + 1
    edges = []
    for p1, p2 in combinations(range(k), 2):
        for j1 in range(m):
            for j2 in range(m):
                sign = NEG if j1 == j2 and j1 >= 1 else POS
                edges.append((turan_vertex(k, t, p1, j1), turan_vertex(k, t, p2, j2), sign))
    return SignedGraph(k * m, edges)


def signed_circuit(n: int, balanced: bool) -> SignedGraph:
    """C_n with no negative edge (balanced) or exactly one (unbalanced)."""
    if n < 3:
        raise GraphError("a circuit needs at least 3 vertices")
    edges = [(i, i + 1, POS) for i in range(n - 1)]
    edges.append((n - 1, 0, POS if balanced else NEG))
    return SignedGraph(n, edges)


def signed_complete(n: int, negative_edges: Iterable[tuple[int, int]] = ()) -> SignedGraph:
    return SignedGraph.from_pairs(n, combinations(range(n), 2), negative_edges)
