"""Symmetric color sets, color values and the propriety rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .graph import NEG, SignedGraph, is_antibalanced


@dataclass(frozen=True)
class SymSet:
    """``t`` self-inverse colors and ``k`` pairs of mutually inverse colors."""

    t: int
    k: int

    def __post_init__(self):
        if self.t < 0 or self.k < 0:
            raise ValueError(f"SymSet needs t, k >= 0, got t={self.t}, k={self.k}")

    @property
    def size(self) -> int:
        return self.t + 2 * self.k

    def colors(self) -> list["SymColor"]:
        out: list[SymColor] = [SelfInverse(i) for i in range(1, self.t + 1)]
        for j in range(1, self.k + 1):
            out += [Signed(j, 1), Signed(j, -1)]
        return out

    def __contains__(self, c) -> bool:
        if isinstance(c, SelfInverse):
            return 1 <= c.i <= self.t
        if isinstance(c, Signed):
            return 1 <= c.j <= self.k
        return False


@dataclass(frozen=True, order=True)
class SelfInverse:
    i: int

    def __post_init__(self):
        if self.i < 1:
            raise ValueError(f"self-inverse index must be >= 1, got {self.i}")

    def __neg__(self):
        return self

    def negate(self):
        return self

    def __str__(self):
        return f"0_{self.i}"


@dataclass(frozen=True, order=True)
class Signed:
    j: int
    sign: int

    def __post_init__(self):
        if self.j < 1 or self.sign not in (1, -1):
            raise ValueError(f"bad signed color ({self.j}, {self.sign})")

    def __neg__(self):
        return Signed(self.j, -self.sign)

    def negate(self):
        return -self

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}s_{self.j}"


SymColor = Union[SelfInverse, Signed]


def parse_color(text: str) -> SymColor:
    """Inverse of ``str`` on colors: ``0_2``, ``+s_1``, ``-s_3``."""
    text = text.strip()
    if text.startswith("0_"):
        return SelfInverse(int(text[2:]))
    if text[:3] in ("+s_", "-s_"):
        return Signed(int(text[3:]), 1 if text[0] == "+" else -1)
    raise ValueError(f"not a color: {text!r}")


@dataclass(frozen=True)
class SymColoring:
    """Total assignment of colors to vertices ``0..n-1`` from ``symset``."""

    colors: tuple[SymColor, ...]
    symset: SymSet = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if self.symset is None:
            t = max((c.i for c in colors if isinstance(c, SelfInverse)), default=0)
            k = max((c.j for c in colors if isinstance(c, Signed)), default=0)
            object.__setattr__(self, "symset", SymSet(t, k))
        for v, c in enumerate(colors):
            if c not in self.symset:
                raise ValueError(f"color {c} of vertex {v} not in S^{self.symset.t}_{2 * self.symset.k}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, SymColor], n: int, symset: SymSet | None = None):
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise ValueError(f"coloring is partial; uncolored vertices {missing}")
        return cls(tuple(mapping[v] for v in range(n)), symset)

    def __getitem__(self, v: int) -> SymColor:
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def names(self) -> list[str]:
        return [str(c) for c in self.colors]


def apply_sign(sign: int, c: SymColor) -> SymColor:
    return -c if sign == NEG else c


def is_proper(g: SignedGraph, c: SymColoring) -> bool:
    """``c(v) != sigma(e) c(w)`` for every edge, parallel edges checked separately."""
    if len(c) != g.n:
        raise ValueError(f"coloring covers {len(c)} vertices, graph has {g.n}")
    return all(c[u] != apply_sign(s, c[v]) for u, v, s in g.edges)


def switch_coloring(c: SymColoring, x: Iterable[int]) -> SymColoring:
    xs = set(x)
    return SymColoring(tuple(-col if v in xs else col for v, col in enumerate(c.colors)), c.symset)


def canonicalize(c: SymColoring) -> SymColoring:
    """Rename colors by first occurrence in vertex order; first use of each pair gets ``+``.

    Renaming classes and flipping a whole pair both preserve propriety.
    """
    si: dict[int, int] = {}
    pairs: dict[int, tuple[int, int]] = {}
    out: list[SymColor] = []
    for col in c.colors:
        if isinstance(col, SelfInverse):
            si.setdefault(col.i, len(si) + 1)
            out.append(SelfInverse(si[col.i]))
        else:
            if col.j not in pairs:
                pairs[col.j] = (len(pairs) + 1, col.sign)
            j, first = pairs[col.j]
            out.append(Signed(j, col.sign * first))
    return SymColoring(tuple(out), c.symset)


@dataclass
class ColorClassReport:
    self_inverse: dict[int, list[int]]
    pairs: dict[int, list[int]]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def color_class_partition(g: SignedGraph, c: SymColoring) -> ColorClassReport:
    """Split ``V`` into self-inverse classes and pair classes and check their structure.

    Self-inverse classes must be independent; pair classes must induce
    antibalanced subgraphs.
    """
    if not is_proper(g, c):
        raise ValueError("coloring is not proper")
    si: dict[int, list[int]] = {i: [] for i in range(1, c.symset.t + 1)}
    pairs: dict[int, list[int]] = {j: [] for j in range(1, c.symset.k + 1)}
    for v, col in enumerate(c.colors):
        if isinstance(col, SelfInverse):
            si[col.i].append(v)
        else:
            pairs[col.j].append(v)
    violations = []
    for i, cls in si.items():
        members = set(cls)
        if any(g.neighbor_mask(v) & sum(1 << w for w in members) for v in members):
            violations.append(f"self-inverse class 0_{i} is not independent")
    for j, cls in pairs.items():
        if not is_antibalanced(g.induced(cls)):
            violations.append(f"pair class s_{j} does not induce an antibalanced subgraph")
    return ColorClassReport(si, pairs, violations)
