"""Exact symset chromatic numbers by backtracking.

Colors are encoded internally as integers: ``0..t-1`` are the self-inverse
colors and ``t + 2j`` / ``t + 2j + 1`` are ``+s_{j+1}`` / ``-s_{j+1}``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

from .colors import SelfInverse, Signed, SymColor, SymColoring, SymSet, canonicalize, is_proper
from .graph import GraphError, SignedGraph, _bits


class BudgetExhausted(RuntimeError):
    pass


class InadmissibleT(ValueError):
    """``t`` exceeds the chromatic number of the underlying graph."""

    def __init__(self, t: int, chi: int):
        super().__init__(f"t={t} exceeds chi(G)={chi}")
        self.t = t
        self.chi = chi


@dataclass
class SolverBudget:
    node_limit: int | None = None
    time_limit: float | None = None
    nodes: int = 0
    started: float = field(default_factory=time.perf_counter)

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExhausted(f"node limit {self.node_limit} exceeded")
        if self.time_limit is not None and not self.nodes & 1023:
            if time.perf_counter() - self.started > self.time_limit:
                raise BudgetExhausted(f"time limit {self.time_limit}s exceeded")

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started


def _tick(budget: SolverBudget | None) -> None:
    if budget is not None:
        budget.tick()


@dataclass(frozen=True)
class ChromaticResult:
    value: int
    witness: SymColoring
    t_used: int
    k_used: int


# encoding helpers


def _neg_code(c: int, t: int) -> int:
    return c if c < t else t + ((c - t) ^ 1)


def decode(c: int, t: int) -> SymColor:
    if c < t:
        return SelfInverse(c + 1)
    j, minus = divmod(c - t, 2)
    return Signed(j + 1, -1 if minus else 1)


def encode(col: SymColor, t: int) -> int:
    if isinstance(col, SelfInverse):
        return col.i - 1
    return t + 2 * (col.j - 1) + (0 if col.sign > 0 else 1)


# underlying chromatic number


def chromatic_number(g: SignedGraph, budget: SolverBudget | None = None) -> int:
    """Exact chromatic number of the underlying simple graph."""
    best = 0
    for comp in g.components():
        best = max(best, _component_chi(g, comp, budget))
    return best


def _component_chi(g: SignedGraph, comp: list[int], budget) -> int:
    if len(comp) == 1:
        return 1
    order = sorted(comp, key=lambda v: -g.simple_degree(v))
    nbrs = {v: g.neighbor_mask(v) for v in comp}
    q = 2
    while not _q_colorable(order, nbrs, q, budget):
        q += 1
    return q


def _q_colorable(order, nbrs, q, budget) -> bool:
    color: dict[int, int] = {}

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in _bits(nbrs[v]) if w in color}
        # new colors only in increasing order (symmetry breaking)
        for c in range(min(used + 1, q)):
            if c in taken:
                continue
            _tick(budget)
            color[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    return place(0, 0)


# symset decision problem


class _Search:
    """Backtracking for one component with forward checking and color symmetry breaking."""

    def __init__(self, g: SignedGraph, comp: Sequence[int], t: int, k: int, budget):
        self.g = g
        self.comp = list(comp)
        self.t = t
        self.k = k
        self.size = t + 2 * k
        self.full = (1 << self.size) - 1
        self.budget = budget
        self.pos = {v: g.pos_mask(v) for v in comp}
        self.neg = {v: g.neg_mask(v) for v in comp}
        self.deg = {v: g.degree(v) for v in comp}
        self.negbit = [1 << _neg_code(c, t) for c in range(self.size)]

    def run(self) -> dict[int, int] | None:
        if self.size == 0:
            return None if self.comp else {}
        domain = {v: self.full for v in self.comp}
        assign: dict[int, int] = {}
        if self._search(domain, assign, 0, 0):
            return assign
        return None

    def _allowed(self, used_si: int, used_pairs: int) -> int:
        t = self.t
        mask = (1 << min(used_si + 1, t)) - 1
        mask |= ((1 << (2 * used_pairs)) - 1) << t
        if used_pairs < self.k:
            mask |= 1 << (t + 2 * used_pairs)
        return mask

    def _search(self, domain, assign, used_si, used_pairs) -> bool:
        if len(assign) == len(self.comp):
            return True
        allowed = self._allowed(used_si, used_pairs)
        best = None
        best_key = None
        for v in self.comp:
            if v in assign:
                continue
            key = (bin(domain[v] & allowed).count("1"), -self.deg[v])
            if best_key is None or key < best_key:
                best, best_key = v, key
                if key[0] == 0:
                    return False
        v = best
        options = domain[v] & allowed
        pos_nbrs = [w for w in _bits(self.pos[v]) if w not in assign]
        neg_nbrs = [w for w in _bits(self.neg[v]) if w not in assign]
        for c in _bits(options):
            _tick(self.budget)
            cbit = 1 << c
            nbit = self.negbit[c]
            saved = []
            dead = False
            for w in pos_nbrs:
                if domain[w] & cbit:
                    saved.append((w, domain[w]))
                    domain[w] &= ~cbit
                    if not domain[w]:
                        dead = True
                        break
            if not dead:
                for w in neg_nbrs:
                    if domain[w] & nbit:
                        saved.append((w, domain[w]))
                        domain[w] &= ~nbit
                        if not domain[w]:
                            dead = True
                            break
            if not dead:
                assign[v] = c
                nsi, npairs = used_si, used_pairs
                if c < self.t:
                    nsi = max(used_si, c + 1)
                else:
                    npairs = max(used_pairs, (c - self.t) // 2 + 1)
                if self._search(domain, assign, nsi, npairs):
                    return True
                del assign[v]
            for w, d in reversed(saved):
                domain[w] = d
        return False


def find_coloring(g: SignedGraph, t: int, k: int, budget: SolverBudget | None = None) -> SymColoring | None:
    """A proper S^t_{2k}-coloring of ``g`` or None if none exists."""
    if t < 0 or k < 0:
        raise ValueError("t and k must be non-negative")
    codes: dict[int, int] = {}
    for comp in g.components():
        part = _Search(g, comp, t, k, budget).run()
        if part is None:
            return None
        codes.update(part)
    coloring = SymColoring(tuple(decode(codes[v], t) for v in range(g.n)), SymSet(t, k))
    assert is_proper(g, coloring)
    return coloring


def _component_t_chromatic(g: SignedGraph, comp: list[int], t: int, budget) -> tuple[int, dict[int, int]]:
    """Smallest k for one component and its coloring codes."""
    k = 0
    while True:
        part = _Search(g, comp, t, k, budget).run()
        if part is not None:
            return k, part
        k += 1
        if k > len(comp):
            raise AssertionError("k exceeded vertex count; solver bug")


def symset_t_chromatic(
    g: SignedGraph, t: int, budget: SolverBudget | None = None, *, strict: bool = True
) -> ChromaticResult:
    """Minimum ``t + 2k`` such that ``g`` has a proper S^t_{2k}-coloring.

    With ``strict`` (the default) ``t`` must not exceed chi(G); otherwise the
    value is simply computed, which gives ``t`` whenever t >= chi(G).
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if strict:
        chi = chromatic_number(g, budget)
        if t > chi:
            raise InadmissibleT(t, chi)
    k_max = 0
    codes: dict[int, int] = {}
    for comp in g.components():
        k, part = _component_t_chromatic(g, comp, t, budget)
        k_max = max(k_max, k)
        codes.update(part)
    witness = SymColoring(tuple(decode(codes[v], t) for v in range(g.n)), SymSet(t, k_max))
    return ChromaticResult(t + 2 * k_max, witness, t, k_max)


def symset_chromatic(g: SignedGraph, budget: SolverBudget | None = None) -> ChromaticResult:
    """Minimum over admissible t of chi^t_sym; ties go to the largest t."""
    chi = chromatic_number(g, budget)
    best: ChromaticResult | None = None
    for t in range(chi, -1, -1):
        r = symset_t_chromatic(g, t, budget, strict=False)
        if best is None or r.value < best.value:
            best = r
    assert best is not None
    return best


def all_t_chromatic(g: SignedGraph, budget: SolverBudget | None = None) -> dict[int, int]:
    """chi^t_sym for every admissible t."""
    chi = chromatic_number(g, budget)
    return {t: symset_t_chromatic(g, t, budget, strict=False).value for t in range(chi + 1)}


# greedy and orderings


def greedy_symset_coloring(g: SignedGraph, t: int, order: Sequence[int]) -> SymColoring:
    """Color along ``order``: self-inverse colors first, then pairs added on demand."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    codes: dict[int, int] = {}
    k = 0
    # codes here are laid out for an unbounded number of pairs
    for v in order:
        forbidden = set()
        for w in _bits(g.pos_mask(v)):
            if w in codes:
                forbidden.add(codes[w])
        for w in _bits(g.neg_mask(v)):
            if w in codes:
                forbidden.add(_neg_code(codes[w], t))
        for c in range(t + 2 * k):
            if c not in forbidden:
                codes[v] = c
                break
        else:
            codes[v] = t + 2 * k
            k += 1
    return SymColoring(tuple(decode(codes[v], t) for v in range(g.n)), SymSet(t, k))


def connectivity_order(g: SignedGraph, last: int) -> list[int]:
    """Vertex order ending at ``last`` where each earlier vertex has a later neighbor."""
    if not g.is_connected():
        raise GraphError("graph is not connected")
    g._check_vertex(last)
    seen = {last}
    bfs = [last]
    i = 0
    while i < len(bfs):
        for w in g.neighbors(bfs[i]):
            if w not in seen:
                seen.add(w)
                bfs.append(w)
        i += 1
    return bfs[::-1]


# enumeration


def enumerate_colorings(
    g: SignedGraph, t: int, k: int, *, dedup: bool = False, budget: SolverBudget | None = None
) -> Iterator[SymColoring]:
    """Every proper S^t_{2k}-coloring; ``dedup`` keeps one per color renaming class."""
    symset = SymSet(t, k)
    size = symset.size
    if size == 0:
        if g.n == 0:
            yield SymColoring((), symset)
        return
    seen = set()
    codes = [0] * g.n

    def rec(v: int):
        if v == g.n:
            col = SymColoring(tuple(decode(c, t) for c in codes), symset)
            if dedup:
                key = canonicalize(col).colors
                if key in seen:
                    return
                seen.add(key)
            yield col
            return
        for c in range(size):
            _tick(budget)
            nc = _neg_code(c, t)
            ok = True
            for w in _bits(g.pos_mask(v)):
                if w < v and codes[w] == c:
                    ok = False
                    break
            if ok:
                for w in _bits(g.neg_mask(v)):
                    if w < v and codes[w] == nc:
                        ok = False
                        break
            if ok:
                codes[v] = c
                yield from rec(v + 1)

    yield from rec(0)


# critical subgraphs


def critical_vertex_set(g: SignedGraph, t: int, budget: SolverBudget | None = None) -> list[int]:
    """Vertices of a chi^t_sym-critical induced subgraph with the same value as ``g``."""
    target = symset_t_chromatic(g, t, budget).value
    keep = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            trial = [w for w in keep if w != v]
            if symset_t_chromatic(g.induced(trial), t, budget, strict=False).value == target:
                keep = trial
                changed = True
    return keep


def find_critical_subgraph(g: SignedGraph, t: int, budget: SolverBudget | None = None) -> SignedGraph:
    return g.induced(critical_vertex_set(g, t, budget))


# reductions to other coloring parameters


def chi_pm(g: SignedGraph, budget: SolverBudget | None = None) -> int:
    """Smallest n with a proper coloring from {±1..±k} (plus 0 when n is odd)."""
    chi = chromatic_number(g, budget)
    values = [symset_t_chromatic(g, t, budget, strict=False).value for t in (0, 1) if t <= chi]
    return min(values)


def chi_mod(g: SignedGraph, budget: SolverBudget | None = None) -> int:
    """Smallest n with a proper coloring from Z_n."""
    if g.num_edges == 0:
        return 1 if g.n else 0
    return min(symset_t_chromatic(g, t, budget, strict=False).value for t in (1, 2))


# brute-force oracles (independent of the search above)


def brute_t_chromatic(g: SignedGraph, t: int) -> int:
    """chi^t_sym by trying every S^t_{2k} assignment; tiny graphs only."""
    k = 0
    while True:
        colors = SymSet(t, k).colors()
        if colors or g.n == 0:
            for combo in product(colors, repeat=g.n):
                if is_proper(g, SymColoring(combo, SymSet(t, k))):
                    return t + 2 * k
        k += 1


def brute_chi_pm(g: SignedGraph) -> int:
    """Smallest n such that M_n colors ``g`` with ``c(v) != sigma(e) c(w)`` over the integers."""
    n = 0
    while True:
        half = n // 2
        palette = [x for x in range(-half, half + 1) if x != 0 or n % 2]
        if _int_colorable(g, palette, None):
            return n
        n += 1


def brute_chi_mod(g: SignedGraph) -> int:
    """Smallest n such that Z_n colors ``g`` with ``c(v) != sigma(e) c(w) mod n``."""
    n = 0
    while True:
        if _int_colorable(g, list(range(n)), n):
            return n
        n += 1


def _int_colorable(g: SignedGraph, palette: list[int], modulus: int | None) -> bool:
    for combo in product(palette, repeat=g.n):
        ok = True
        for u, v, s in g.edges:
            rhs = s * combo[v]
            if modulus is not None:
                if combo[u] % modulus == rhs % modulus:
                    ok = False
                    break
            elif combo[u] == rhs:
                ok = False
                break
        if ok:
            return True
    return False
