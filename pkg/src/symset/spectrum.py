"""Switching classes of a fixed underlying graph and chromatic spectra over them."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .graph import NEG, POS, SignedGraph
from .solver import SolverBudget, chromatic_number, symset_chromatic, symset_t_chromatic


class SpectrumError(AssertionError):
    """A computed spectrum contradicts the progression/interval theorems."""


class SwitchingClassIter:
    """Iterates one representative per switching class of ``base``.

    Spanning-forest edges of the single-edge part are fixed positive and
    the co-tree edges range over all sign patterns.  Digons are sign-symmetric
    and carried over unchanged.
    """

    def __init__(self, base: SignedGraph):
        self.base = base
        self.digons = [(u, v) for u, v in base.pairs if base.is_digon(u, v)]
        single = [(u, v) for u, v in base.pairs if not base.is_digon(u, v)]
        parent = list(range(base.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        self.forest: list[tuple[int, int]] = []
        self.cotree: list[tuple[int, int]] = []
        for u, v in single:
            ru, rv = find(u), find(v)
            if ru == rv:
                self.cotree.append((u, v))
            else:
                parent[ru] = rv
                self.forest.append((u, v))
        self.cursor = 0

    def __len__(self) -> int:
        return 1 << len(self.cotree)

    def representative(self, bits: int) -> SignedGraph:
        edges = [(u, v, POS) for u, v in self.forest]
        edges += [(u, v, NEG if bits >> i & 1 else POS) for i, (u, v) in enumerate(self.cotree)]
        for u, v in self.digons:
            edges += [(u, v, POS), (u, v, NEG)]
        return SignedGraph(self.base.n, edges)

    def representative_of(self, g: SignedGraph) -> int:
        """Bits of the representative equivalent to ``g`` (same underlying graph)."""
        # switch g so forest edges become positive: label by forest parity
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
        for u, v in self.forest:
            s = g.signs_between(u, v)[0]
            adj[u].append((v, s))
            adj[v].append((u, s))
        label = [0] * g.n
        seen = [False] * g.n
        for root in range(g.n):
            if seen[root]:
                continue
            seen[root] = True
            stack = [root]
            while stack:
                x = stack.pop()
                for y, s in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        label[y] = label[x] ^ (1 if s == NEG else 0)
                        stack.append(y)
        bits = 0
        for i, (u, v) in enumerate(self.cotree):
            s = g.signs_between(u, v)[0]
            if (s == NEG) ^ bool(label[u] ^ label[v]):
                bits |= 1 << i
        return bits

    def __iter__(self) -> Iterator[SignedGraph]:
        return self

    def __next__(self) -> SignedGraph:
        if self.cursor >= len(self):
            raise StopIteration
        g = self.representative(self.cursor)
        self.cursor += 1
        return g


def switching_classes(base: SignedGraph) -> SwitchingClassIter:
    return SwitchingClassIter(base)


@dataclass
class SpectrumResult:
    t: int | None  # None for the symset (all-t) spectrum
    values: list[int]
    witnesses: dict[int, SignedGraph]
    sampled: bool = False
    classes: int = 0
    t_used: dict[int, int] = field(default_factory=dict)
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def min(self) -> int:
        return self.values[0]

    @property
    def max(self) -> int:
        return self.values[-1]


def _class_bits(it: SwitchingClassIter, sample: int | None, seed: int | None) -> list[int]:
    if sample is None:
        return list(range(len(it)))
    rng = random.Random(seed)
    return sorted({rng.randrange(len(it)) for _ in range(sample)})


def t_spectrum(
    base: SignedGraph,
    t: int,
    budget: SolverBudget | None = None,
    *,
    sample: int | None = None,
    seed: int | None = None,
    check: bool = True,
) -> SpectrumResult:
    """chi^t_sym over every switching class of ``base``.

    For digon-free bases and t < chi the result is checked to be
    ``{t+2, t+4, ..., M}``; a gap raises SpectrumError.
    """
    chi = chromatic_number(base, budget)
    if t > chi:
        raise ValueError(f"t={t} exceeds chi(G)={chi}")
    it = switching_classes(base)
    memo: dict[int, int] = {}
    witnesses: dict[int, SignedGraph] = {}
    for bits in _class_bits(it, sample, seed):
        g = it.representative(bits)
        memo[bits] = symset_t_chromatic(g, t, budget, strict=False).value
        witnesses.setdefault(memo[bits], g)
    values = sorted(witnesses)
    result = SpectrumResult(
        t, values, witnesses, sampled=sample is not None, classes=len(it), counts=dict(Counter(memo.values()))
    )
    if check and sample is None and not base.has_digons() and base.num_edges:
        if t == chi:
            expected = [t]
        else:
            expected = list(range(t + 2, values[-1] + 1, 2))
        if values != expected:
            raise SpectrumError(f"t-spectrum {values} for t={t} is not {expected}")
    return result


def symset_spectrum(
    base: SignedGraph,
    budget: SolverBudget | None = None,
    *,
    sample: int | None = None,
    seed: int | None = None,
    check: bool = True,
) -> SpectrumResult:
    """chi_sym over every switching class; digon-free bases must give ``{2..chi}``."""
    if base.num_edges == 0:
        raise ValueError("symset spectrum needs at least one edge")
    it = switching_classes(base)
    witnesses: dict[int, SignedGraph] = {}
    t_used: dict[int, int] = {}
    counts: Counter[int] = Counter()
    for bits in _class_bits(it, sample, seed):
        g = it.representative(bits)
        r = symset_chromatic(g, budget)
        counts[r.value] += 1
        if r.value not in witnesses:
            witnesses[r.value] = g
            t_used[r.value] = r.t_used
    values = sorted(witnesses)
    result = SpectrumResult(None, values, witnesses, sampled=sample is not None, classes=len(it), t_used=t_used, counts=dict(counts))
    if check and sample is None and not base.has_digons():
        expected = list(range(2, chromatic_number(base, budget) + 1))
        if values != expected:
            raise SpectrumError(f"symset spectrum {values} is not {expected}")
    return result
