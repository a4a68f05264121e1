"""Symset coloring as DP (correspondence) coloring.

Labels ``0..t-1`` are the fixed labels s_1..s_t; label ``t + j`` is the
shift label r_j for ``j`` in ``0..2k-1``.  A negative edge matches r_j with
r_{j+k mod 2k}; everything else is matched identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colors import SelfInverse, Signed, SymColoring, SymSet, is_proper
from .graph import NEG, SignedGraph
from .solver import SolverBudget, _tick


class TransversalError(ValueError):
    pass


@dataclass(frozen=True)
class DPCover:
    base: SignedGraph
    t: int
    k: int
    # (u, v, sign) -> pairs (label at u, label at v)
    matchings: dict

    @property
    def num_labels(self) -> int:
        return self.t + 2 * self.k

    def label_name(self, label: int) -> str:
        return f"s_{label + 1}" if label < self.t else f"r_{label - self.t}"

    def cover_edges(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        """Cover edges between (label, vertex) nodes; digon duplicates collapse."""
        out = set()
        for (u, v, _), pairs in self.matchings.items():
            for a, b in pairs:
                out.add(((a, u), (b, v)))
        return out

    def conflicts(self, u: int, a: int, v: int, b: int) -> bool:
        """Whether (a, u) and (b, v) are joined in the cover."""
        for s in self.base.signs_between(u, v):
            key = (u, v, s) if u < v else (v, u, s)
            pair = (a, b) if u < v else (b, a)
            if pair in self.matchings[key]:
                return True
        return False


@dataclass(frozen=True)
class Transversal:
    pick: tuple[int, ...]


def _matching(t: int, k: int, sign: int) -> frozenset[tuple[int, int]]:
    pairs = [(i, i) for i in range(t)]
    for j in range(2 * k):
        other = (j + k) % (2 * k) if sign == NEG else j
        pairs.append((t + j, t + other))
    return frozenset(pairs)


def build_cover(g: SignedGraph, t: int, k: int) -> DPCover:
    if t < 0 or k < 0:
        raise ValueError("t and k must be non-negative")
    if t + 2 * k == 0 and g.n:
        raise ValueError("empty label set cannot cover a nonempty graph")
    matchings = {(u, v, s): _matching(t, k, s) for u, v, s in g.edges}
    return DPCover(g, t, k, matchings)


def independent_transversal(cover: DPCover, budget: SolverBudget | None = None) -> Transversal | None:
    g = cover.base
    if g.n == 0:
        return Transversal(())
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    pick: dict[int, int] = {}

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for a in range(cover.num_labels):
            _tick(budget)
            if any(w in pick and cover.conflicts(v, a, w, pick[w]) for w in g.neighbors(v)):
                continue
            pick[v] = a
            if rec(i + 1):
                return True
            del pick[v]
        return False

    if rec(0):
        return Transversal(tuple(pick[v] for v in range(g.n)))
    return None


def is_independent_transversal(cover: DPCover, tr: Transversal) -> bool:
    g = cover.base
    if len(tr.pick) != g.n or any(not 0 <= a < cover.num_labels for a in tr.pick):
        return False
    return not any(cover.conflicts(u, tr.pick[u], v, tr.pick[v]) for u, v in g.pairs)


def transversal_to_coloring(cover: DPCover, tr: Transversal) -> SymColoring:
    if not is_independent_transversal(cover, tr):
        raise TransversalError("not an independent transversal of the cover")
    t, k = cover.t, cover.k
    colors = []
    for a in tr.pick:
        if a < t:
            colors.append(SelfInverse(a + 1))
        else:
            j = a - t
            colors.append(Signed(j % k + 1, 1 if j < k else -1))
    c = SymColoring(tuple(colors), SymSet(t, k))
    assert is_proper(cover.base, c)
    return c


def coloring_to_transversal(cover: DPCover, c: SymColoring) -> Transversal:
    if len(c) != cover.base.n or not is_proper(cover.base, c):
        raise TransversalError("coloring is not proper on the cover's base graph")
    t, k = cover.t, cover.k
    pick = []
    for col in c.colors:
        if col not in SymSet(t, k):
            raise TransversalError(f"color {col} not available for t={t}, k={k}")
        if isinstance(col, SelfInverse):
            pick.append(col.i - 1)
        else:
            pick.append(t + (col.j - 1) + (0 if col.sign > 0 else k))
    return Transversal(tuple(pick))
