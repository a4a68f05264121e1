"""Signed multigraphs: switching, balance, circuit signs and frustration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

POS = 1
NEG = -1


class GraphError(ValueError):
    """Invalid graph data (loops, bad vertex indices, mismatched graphs)."""


class SignedGraph:
    """Loopless signed multigraph on vertices ``0..n-1``.

    Each unordered pair carries at most one positive and at most one
    negative edge; a pair with both is a digon.  Instances are immutable.
    """

    __slots__ = ("n", "_signs", "_pos", "_neg", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        signs: dict[tuple[int, int], int] = {}
        for u, v, s in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if s not in (POS, NEG):
                raise GraphError(f"sign must be +1 or -1, got {s!r}")
            key = (u, v) if u < v else (v, u)
            # bit 1 = positive edge present, bit 2 = negative edge present
            signs[key] = signs.get(key, 0) | (1 if s == POS else 2)
        self.n = n
        self._signs = signs
        pos = [0] * n
        neg = [0] * n
        for (u, v), flags in signs.items():
            if flags & 1:
                pos[u] |= 1 << v
                pos[v] |= 1 << u
            if flags & 2:
                neg[u] |= 1 << v
                neg[v] |= 1 << u
        self._pos = tuple(pos)
        self._neg = tuple(neg)
        self._edges = tuple(
            (u, v, s)
            for (u, v) in sorted(signs)
            for s in (POS, NEG)
            if signs[(u, v)] & (1 if s == POS else 2)
        )

    # construction helpers

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], negative: Iterable[tuple[int, int]] = ()):
        """Simple graph on ``pairs`` whose edges in ``negative`` are negative."""
        neg = {_key(u, v) for u, v in negative}
        pairs = [_key(u, v) for u, v in pairs]
        missing = neg - set(pairs)
        if missing:
            raise GraphError(f"negative edges not in graph: {sorted(missing)}")
        return cls(n, [(u, v, NEG if (u, v) in neg else POS) for u, v in pairs])

    # accessors

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as ``(u, v, sign)`` with ``u < v``; a digon yields two entries."""
        return self._edges

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self._signs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def signs_between(self, u: int, v: int) -> tuple[int, ...]:
        flags = self._signs.get(_key(u, v), 0)
        return tuple(s for s, bit in ((POS, 1), (NEG, 2)) if flags & bit)

    def is_digon(self, u: int, v: int) -> bool:
        return self._signs.get(_key(u, v), 0) == 3

    def has_digons(self) -> bool:
        return any(f == 3 for f in self._signs.values())

    def adjacent(self, u: int, v: int) -> bool:
        return _key(u, v) in self._signs

    def neighbor_mask(self, v: int) -> int:
        return self._pos[v] | self._neg[v]

    def pos_mask(self, v: int) -> int:
        return self._pos[v]

    def neg_mask(self, v: int) -> int:
        return self._neg[v]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.neighbor_mask(v))

    def degree(self, v: int) -> int:
        """Multigraph degree: a digon counts twice."""
        return bin(self._pos[v]).count("1") + bin(self._neg[v]).count("1")

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def simple_degree(self, v: int) -> int:
        return bin(self.neighbor_mask(v)).count("1")

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def negative_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, s in self._edges if s == NEG]

    # derived graphs

    def underlying(self) -> "SignedGraph":
        """All-positive simple graph on the same adjacency."""
        return SignedGraph(self.n, [(u, v, POS) for u, v in self._signs])

    def negated(self) -> "SignedGraph":
        return SignedGraph(self.n, [(u, v, -s) for u, v, s in self._edges])

    def induced(self, vertices: Iterable[int]) -> "SignedGraph":
        """Induced subgraph, relabelled to ``0..m-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        return SignedGraph(
            len(keep),
            [(index[u], index[v], s) for u, v, s in self._edges if u in index and v in index],
        )

    def delete_vertex(self, v: int) -> "SignedGraph":
        self._check_vertex(v)
        return self.induced(w for w in range(self.n) if w != v)

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 0
            frontier = 1 << start
            while frontier:
                comp |= frontier
                nxt = 0
                for w in _bits(frontier):
                    nxt |= self.neighbor_mask(w)
                frontier = nxt & ~comp
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_regular(self) -> bool:
        return len({self.degree(v) for v in range(self.n)}) <= 1

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.neighbor_mask(v) == full & ~(1 << v) for v in range(self.n))

    def is_circuit(self) -> bool:
        """Connected, 2-regular and simple, with at least three vertices."""
        return (
            self.n >= 3
            and not self.has_digons()
            and all(self.simple_degree(v) == 2 for v in range(self.n))
            and self.is_connected()
        )

    def is_bipartite(self) -> bool:
        return _two_color(self.n, self.neighbor_mask, lambda u, w: 1) is not None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # value semantics

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self._signs == other._signs

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        body = ", ".join(f"{u}{'+' if s == POS else '-'}{v}" for u, v, s in self._edges)
        return f"SignedGraph(n={self.n}, [{body}])"


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _two_color(n, nbr_mask, parity):
    """2-label every component so that ``label[u] ^ label[w] == parity(u, w)``.

    Returns the label list or None on a conflict.
    """
    label = [-1] * n
    for root in range(n):
        if label[root] >= 0:
            continue
        label[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in _bits(nbr_mask(u)):
                want = label[u] ^ parity(u, w)
                if label[w] < 0:
                    label[w] = want
                    queue.append(w)
                elif label[w] != want:
                    return None
    return label


def _vertex_set(g: SignedGraph, x: Iterable[int]) -> frozenset[int]:
    xs = frozenset(x)
    for v in xs:
        g._check_vertex(v)
    return xs


def switch_at(g: SignedGraph, x: Iterable[int]) -> SignedGraph:
    """Reverse the sign of every edge with exactly one end in ``x``."""
    xs = _vertex_set(g, x)
    return SignedGraph(
        g.n, [(u, v, -s if (u in xs) != (v in xs) else s) for u, v, s in g.edges]
    )


@dataclass(frozen=True)
class BalanceCertificate:
    balanced: bool
    partition: tuple[frozenset[int], frozenset[int]] | None = None
    witness_circuit: tuple[int, ...] | None = None
    # sign of each step of the witness walk; disambiguates digons
    witness_signs: tuple[int, ...] | None = None

    def validate(self, g: SignedGraph) -> bool:
        if self.balanced:
            if self.partition is None:
                return False
            a, b = self.partition
            if a | b != frozenset(range(g.n)) or a & b:
                return False
            return all((s == NEG) == ((u in a) != (v in a)) for u, v, s in g.edges)
        if self.witness_circuit is None:
            return False
        return circuit_sign(g, self.witness_circuit, self.witness_signs) == NEG


def is_balanced(g: SignedGraph) -> BalanceCertificate:
    """Decide balance by sign-aware BFS; returns a Harary partition or a negative closed walk."""
    for u, v in g.pairs:
        if g.is_digon(u, v):
            return BalanceCertificate(False, witness_circuit=(u, v, u), witness_signs=(POS, NEG))

    label = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if label[root] >= 0:
            continue
        label[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                flip = 1 if g.signs_between(u, w)[0] == NEG else 0
                if label[w] < 0:
                    label[w] = label[u] ^ flip
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif label[w] != label[u] ^ flip:
                    cycle = _tree_cycle(u, w, parent, depth)
                    return BalanceCertificate(False, witness_circuit=cycle)
    a = frozenset(v for v in range(g.n) if label[v] == 0)
    b = frozenset(range(g.n)) - a
    return BalanceCertificate(True, partition=(a, b))


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor, right as well
    walk = left + right[-2::-1]
    walk.append(walk[0])
    return tuple(walk)


def is_antibalanced(g: SignedGraph) -> bool:
    return is_balanced(g.negated()).balanced


def circuit_sign(g: SignedGraph, cycle: Sequence[int], signs: Sequence[int] | None = None) -> int:
    """Product of edge signs along a closed walk.

    ``signs`` picks the parallel edge per step; it is required where the
    walk crosses a digon and otherwise checked against the graph.
    """
    if len(cycle) < 2 or cycle[0] != cycle[-1]:
        raise GraphError("cycle must be a closed vertex sequence")
    if signs is not None and len(signs) != len(cycle) - 1:
        raise GraphError("need one sign per step of the walk")
    product = 1
    for i, (u, v) in enumerate(zip(cycle, cycle[1:])):
        available = g.signs_between(u, v)
        if not available:
            raise GraphError(f"({u}, {v}) is not an edge")
        if signs is not None:
            s = signs[i]
            if s not in available:
                raise GraphError(f"no edge of sign {s:+d} between {u} and {v}")
        elif len(available) == 2:
            raise GraphError(f"walk uses digon {u}{v}; pass signs to choose the edge")
        else:
            s = available[0]
        product *= s
    return product


def frustration_index(g: SignedGraph) -> int:
    """Minimum number of negative edges over all switchings (exact).

    Enumerates switching sets per component with its first vertex pinned,
    walking the subsets in Gray-code order.
    """
    total = 0
    for comp in g.components():
        total += _component_frustration(g, comp)
    return total


def _component_frustration(g: SignedGraph, comp: list[int]) -> int:
    digons = 0
    single = []
    for u, v in g.pairs:
        if u in comp or v in comp:
            if g.is_digon(u, v):
                digons += 1
            else:
                single.append((u, v, g.signs_between(u, v)[0]))
    free = comp[1:]
    # current effective sign per single edge
    eff = [s for _, _, s in single]
    incident: dict[int, list[int]] = {v: [] for v in comp}
    for i, (u, v, _) in enumerate(single):
        incident[u].append(i)
        incident[v].append(i)
    count = sum(1 for s in eff if s == NEG)
    best = count
    for step in range(1, 1 << len(free)):
        # Gray code: flip the vertex at the lowest set bit of step
        v = free[(step & -step).bit_length() - 1]
        for i in incident[v]:
            eff[i] = -eff[i]
            count += 1 if eff[i] == NEG else -1
        if count < best:
            best = count
    return best + digons


def are_equivalent(g1: SignedGraph, g2: SignedGraph) -> frozenset[int] | None:
    """Return ``X`` with ``switch_at(g1, X) == g2``, or None if inequivalent."""
    if g1.n != g2.n or set(g1.pairs) != set(g2.pairs):
        raise GraphError("graphs have different underlying graphs")
    diff: dict[tuple[int, int], int] = {}
    for u, v in g1.pairs:
        d1, d2 = g1.is_digon(u, v), g2.is_digon(u, v)
        if d1 != d2:
            raise GraphError("graphs have different underlying graphs")
        if not d1:
            diff[(u, v)] = 0 if g1.signs_between(u, v) == g2.signs_between(u, v) else 1

    def single_nbrs(v):
        return sum(1 << w for w in g1.neighbors(v) if not g1.is_digon(v, w))

    label = _two_color(g1.n, single_nbrs, lambda u, w: diff[_key(u, w)])
    if label is None:
        return None
    return frozenset(v for v in range(g1.n) if label[v])


def iter_circuits(g: SignedGraph) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every circuit of ``g`` as (closed vertex walk, edge signs), digons included.

    Exponential; intended as a brute-force oracle on small graphs.
    """
    for u, v in g.pairs:
        if g.is_digon(u, v):
            yield (u, v, u), (POS, NEG)
    n = g.n
    for start in range(n):
        # simple cycles whose minimum vertex is start
        stack = [(start, [start], 1 << start)]
        while stack:
            v, path, used = stack.pop()
            for w in g.neighbors(v):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    walk = tuple(path) + (start,)
                    for choice in _sign_choices(g, walk):
                        yield walk, choice
                elif w > start and not used >> w & 1:
                    stack.append((w, path + [w], used | 1 << w))


def _sign_choices(g: SignedGraph, walk: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    options = [g.signs_between(a, b) for a, b in zip(walk, walk[1:])]
    out: list[tuple[int, ...]] = [()]
    for opt in options:
        out = [o + (s,) for o in out for s in opt]
    yield from out
