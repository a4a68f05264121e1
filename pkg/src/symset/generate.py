"""Isomorph-free generation of small underlying graphs and random signed graphs.

Graphs on n vertices come from graphs on n-1 vertices by adding a vertex
with every possible neighborhood; duplicates are removed by a canonical
form (lexicographically least adjacency code over degree-respecting
relabellings).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product

from .graph import NEG, POS, SignedGraph


def _canonical(n: int, pairs: frozenset[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(deg[v], []).append(v)
    blocks = [groups[d] for d in sorted(groups, reverse=True)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in pairs))
        if best is None or code < best:
            best = code
    return best if best is not None else ()


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n == 0:
        return ((),)
    found = set()
    for prev in _all_graphs(n - 1):
        for r in range(n):
            for nbrs in combinations(range(n - 1), r):
                pairs = frozenset(prev) | {(w, n - 1) for w in nbrs}
                found.add(_canonical(n, frozenset(pairs)))
    return tuple(sorted(found, key=lambda p: (len(p), p)))


def all_graphs(n: int, connected: bool = False) -> list[SignedGraph]:
    """All non-isomorphic simple graphs on ``n`` vertices, as all-positive signed graphs."""
    if n > 7:
        raise ValueError("exhaustive generation is limited to n <= 7")
    out = [SignedGraph(n, [(u, v, POS) for u, v in p]) for p in _all_graphs(n)]
    if connected:
        out = [g for g in out if g.is_connected()]
    return out


def graphs_up_to(max_n: int, connected: bool = False, min_n: int = 1) -> list[SignedGraph]:
    return [g for n in range(min_n, max_n + 1) for g in all_graphs(n, connected)]


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> SignedGraph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    pairs = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        pairs.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in pairs and rng.random() < p:
            pairs.add((u, v))
    return SignedGraph(n, [(u, v, POS) for u, v in sorted(pairs)])


def random_signature(base: SignedGraph, rng: random.Random) -> SignedGraph:
    """Uniformly random sign on each simple pair of ``base`` (digons kept)."""
    edges = []
    for u, v in base.pairs:
        if base.is_digon(u, v):
            edges += [(u, v, POS), (u, v, NEG)]
        else:
            edges.append((u, v, rng.choice((POS, NEG))))
    return SignedGraph(base.n, edges)


def random_signed_graph(n: int, rng: random.Random, p: float = 0.5) -> SignedGraph:
    """Random simple signed graph (not necessarily connected)."""
    edges = [(u, v, rng.choice((POS, NEG))) for u, v in combinations(range(n), 2) if rng.random() < p]
    return SignedGraph(n, edges)
