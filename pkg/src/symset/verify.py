"""Exhaustive and seeded-random checks of the structural theorems on small graphs.

Every suite returns a SuiteResult; the first counterexample stops the suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .colors import SelfInverse, is_proper, switch_coloring
from .constructions import complete_graph, cycle_graph, signed_circuit, signed_expansion, turan_witness
from .dp import build_cover, coloring_to_transversal, independent_transversal, transversal_to_coloring
from .generate import graphs_up_to, random_connected_graph, random_signature, random_signed_graph
from .graph import SignedGraph, frustration_index, is_balanced, switch_at
from .io import format_graph
from .solver import (
    SolverBudget,
    brute_chi_mod,
    brute_chi_pm,
    chi_mod,
    chi_pm,
    chromatic_number,
    enumerate_colorings,
    find_coloring,
    symset_chromatic,
    symset_t_chromatic,
)
from .spectrum import SpectrumError, switching_classes, symset_spectrum, t_spectrum


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    counterexample: dict | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample is None and self.instances > 0

    def fail(self, g: SignedGraph, **info) -> "SuiteResult":
        self.counterexample = {"graph": format_graph(g), **info}
        return self


def signed_graphs(max_n: int, connected: bool = False, min_n: int = 1) -> Iterator[SignedGraph]:
    """One representative per switching class of every graph with n <= max_n."""
    for base in graphs_up_to(max_n, connected=connected, min_n=min_n):
        yield from switching_classes(base)


def brooks_exception(g: SignedGraph, t: int, chi: int) -> bool:
    """The five cases where chi^t_sym reaches Delta + 2."""
    balanced = is_balanced(g).balanced
    if g.is_complete() and (t == chi - 1 or balanced):
        return True
    if g.is_circuit():
        odd = g.n % 2 == 1
        if balanced and odd:
            return True
        if not balanced and not odd and t == 0:
            return True
        if not balanced and odd and t == 2:
            return True
    return False


def _brooks_check(res: SuiteResult, g: SignedGraph, budget) -> bool:
    chi = chromatic_number(g, budget)
    delta = g.max_degree()
    for t in range(chi + 1):
        v = symset_t_chromatic(g, t, budget).value
        res.instances += 1
        exceptional = brooks_exception(g, t, chi)
        if (delta - t) % 2:
            ok = v <= delta + 1
        else:
            ok = (v <= delta or v == delta + 2) and (v == delta + 2) == exceptional
        if not ok or v % 2 != t % 2:
            res.fail(g, t=t, delta=delta, got=v, exceptional=exceptional)
            return False
    return True


def suite_brooks(max_n: int = 5, seed: int = 0, random_count: int = 200, budget=None) -> SuiteResult:
    res = SuiteResult("brooks")
    for g in signed_graphs(max_n, connected=True):
        if not _brooks_check(res, g, budget):
            return res
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.choice((6, 7))
        g = random_signature(random_connected_graph(n, rng, p=rng.uniform(0.2, 0.8)), rng)
        if not _brooks_check(res, g, budget):
            return res
    return res


def suite_complete(max_n: int = 6, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("complete")
    for n in range(3, max_n + 1):
        delta = n - 1
        for g in switching_classes(complete_graph(n)):
            balanced = is_balanced(g).balanced
            for t in range(n + 1):
                v = symset_t_chromatic(g, t, budget).value
                res.instances += 1
                if (delta - t) % 2:
                    ok = v <= delta + 1
                else:
                    ok = (v == delta + 2) == (balanced or t == n - 1) and (v <= delta or v == delta + 2)
                if not ok:
                    return res.fail(g, t=t, got=v, balanced=balanced)
    return res


def circuit_expected(n: int, balanced: bool, t: int) -> int:
    if t in (1, 3):
        return 3
    odd = n % 2 == 1
    four = (balanced and odd) or (not balanced and not odd and t == 0) or (not balanced and odd and t == 2)
    return 4 if four else 2


def suite_circuit(max_n: int = 8, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("circuit")
    for n in range(3, max_n + 1):
        chi = 3 if n % 2 else 2
        for balanced in (True, False):
            g = signed_circuit(n, balanced)
            for t in range(chi + 1):
                v = symset_t_chromatic(g, t, budget).value
                res.instances += 1
                if v != circuit_expected(n, balanced, t):
                    return res.fail(g, t=t, expected=circuit_expected(n, balanced, t), got=v)
    return res


def suite_expansion(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    """chi^t_sym(±G) = 2 chi(G) - t, and the complete/odd-circuit refinement."""
    res = SuiteResult("expansion")
    bases = [complete_graph(n) for n in range(2, max_n + 1)] + [cycle_graph(5)]
    bases += graphs_up_to(min(max_n, 4), connected=True)
    for base in bases:
        chi = chromatic_number(base)
        pm = signed_expansion(base)
        delta = pm.max_degree()
        special = base.is_complete() or (base.is_circuit() and base.n % 2 == 1)
        for t in range(chi + 1):
            v = symset_t_chromatic(pm, t, budget).value
            res.instances += 1
            if v != 2 * chi - t:
                return res.fail(pm, t=t, expected=2 * chi - t, got=v)
            if special and v != delta + 2 - t or not special and v > delta - t:
                return res.fail(pm, t=t, delta=delta, got=v, special=special)
    return res


TURAN_CASES = [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)]


def suite_turan(max_n: int = 3, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("turan")
    for k, t in TURAN_CASES:
        if k > max_n:
            continue
        g = turan_witness(k, t)
        v = symset_t_chromatic(g, t, budget).value
        res.instances += 1
        if v != 2 * k - t:
            return res.fail(g, k=k, t=t, expected=2 * k - t, got=v)
    return res


def suite_spectrum_t(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("spectrum-t")
    for base in graphs_up_to(max_n, connected=True):
        chi = chromatic_number(base)
        for t in range(chi):
            try:
                spec = t_spectrum(base, t, budget)
            except SpectrumError as exc:
                return res.fail(base, t=t, error=str(exc))
            res.instances += 1
            if spec.min != t + 2:
                return res.fail(base, t=t, expected_min=t + 2, got=spec.values)
    return res


def suite_spectrum_sym(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("spectrum-sym")
    for base in graphs_up_to(max_n, connected=True, min_n=2):
        try:
            spec = symset_spectrum(base, budget)
        except SpectrumError as exc:
            return res.fail(base, error=str(exc))
        res.instances += 1
        if spec.values != list(range(2, chromatic_number(base) + 1)):
            return res.fail(base, got=spec.values)
    return res


def suite_deletion(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("deletion")
    for g in signed_graphs(max_n):
        chi = chromatic_number(g)
        for t in range(chi + 1):
            v = symset_t_chromatic(g, t, budget).value
            for x in range(g.n):
                h = g.delete_vertex(x)
                if t > chromatic_number(h):
                    continue
                w = symset_t_chromatic(h, t, budget).value
                res.instances += 1
                if v - w not in (0, 2):
                    return res.fail(g, t=t, vertex=x, before=v, after=w)
    return res


def _pair_classes(c) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for v, col in enumerate(c.colors):
        if not isinstance(col, SelfInverse):
            out.setdefault(col.j, []).append(v)
    return out


def _si_classes(c) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for v, col in enumerate(c.colors):
        if isinstance(col, SelfInverse):
            out.setdefault(col.i, []).append(v)
    return out


def suite_frustration(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("frustration")
    for g in signed_graphs(max_n):
        r = symset_chromatic(g, budget)
        ell = frustration_index(g)
        res.instances += 1
        if (ell == 0) != is_balanced(g).balanced:
            return res.fail(g, frustration=ell, error="frustration/balance mismatch")
        if r.k_used > ell:
            return res.fail(g, k=r.k_used, frustration=ell)
        for j, cls in _pair_classes(r.witness).items():
            if g.induced(cls).is_bipartite():
                return res.fail(g, pair_class=j, members=cls, error="bipartite pair class")
    return res


def restriction_check(g: SignedGraph, budget=None) -> dict | None:
    """H_{p,q} restrictions of a maximal-t minimal coloring; returns a failure record or None."""
    r = symset_chromatic(g, budget)
    si = list(_si_classes(r.witness).values())
    pairs = list(_pair_classes(r.witness).values())
    # classes may be empty only if unused; a minimal coloring uses every color
    for p in range(len(si) + 1):
        for chosen_si in combinations(si, p):
            for q in range(len(pairs) + 1):
                for chosen_pairs in combinations(pairs, q):
                    verts = [v for cls in chosen_si + chosen_pairs for v in cls]
                    h = g.induced(verts)
                    hr = symset_chromatic(h, budget)
                    hp = symset_t_chromatic(h, p, budget, strict=False).value
                    if hr.value != p + 2 * q or hr.t_used != p or hp != p + 2 * q:
                        return {"p": p, "q": q, "vertices": verts, "chi_sym": hr.value, "t_used": hr.t_used, "chi_p": hp}
    # corollary: self-inverse part has chi_sym = t = chi, pair part chi^0_sym = 2k
    h1 = g.induced([v for cls in si for v in cls])
    h2 = g.induced([v for cls in pairs for v in cls])
    if symset_chromatic(h1, budget).value != r.t_used or chromatic_number(h1) != r.t_used:
        return {"corollary": "self-inverse part", "t": r.t_used}
    if symset_chromatic(h2, budget).value != 2 * r.k_used or symset_t_chromatic(h2, 0, budget, strict=False).value != 2 * r.k_used:
        return {"corollary": "pair part", "k": r.k_used}
    return None


def suite_restriction(max_n: int = 6, seed: int = 0, count: int = 100, budget=None) -> SuiteResult:
    res = SuiteResult("restriction")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        g = random_signed_graph(n, rng, p=rng.uniform(0.3, 0.9))
        failure = restriction_check(g, budget)
        res.instances += 1
        if failure:
            return res.fail(g, **failure)
    return res


def dp_pairs(limit: int = 5) -> list[tuple[int, int]]:
    return [(t, k) for t in range(limit + 1) for k in range(limit + 1) if 1 <= t + 2 * k <= limit]


def suite_dp_equiv(max_n: int = 4, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("dp-equiv")
    graphs = list(signed_graphs(max_n))
    graphs += [signed_expansion(b) for b in graphs_up_to(min(max_n, 3))]
    roundtrips = 0
    for g in graphs:
        for t, k in dp_pairs():
            cover = build_cover(g, t, k)
            tr = independent_transversal(cover, budget)
            col = find_coloring(g, t, k, budget)
            res.instances += 1
            if (tr is None) != (col is None):
                return res.fail(g, t=t, k=k, transversal=tr is not None, coloring=col is not None)
            if tr is not None and not is_proper(g, transversal_to_coloring(cover, tr)):
                return res.fail(g, t=t, k=k, error="transversal maps to improper coloring")
            for c in enumerate_colorings(g, t, k):
                roundtrips += 1
                if transversal_to_coloring(cover, coloring_to_transversal(cover, c)) != c:
                    return res.fail(g, t=t, k=k, coloring=c.names(), error="round trip")
    res.notes["roundtrips"] = roundtrips
    return res


def suite_chi_oracles(max_n: int = 4, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("chi-oracles")
    for g in signed_graphs(max_n):
        res.instances += 1
        a, b = chi_pm(g, budget), brute_chi_pm(g)
        if a != b:
            return res.fail(g, quantity="chi_pm", solver=a, brute=b)
        a, b = chi_mod(g, budget), brute_chi_mod(g)
        if a != b:
            return res.fail(g, quantity="chi_mod", solver=a, brute=b)
    return res


def chromatic_profile(g: SignedGraph, budget=None) -> dict:
    chi = chromatic_number(g, budget)
    r = symset_chromatic(g, budget)
    return {
        "t": [symset_t_chromatic(g, t, budget).value for t in range(chi + 1)],
        "sym": (r.value, r.t_used),
        "pm": chi_pm(g, budget),
        "mod": chi_mod(g, budget),
        "frustration": frustration_index(g),
        "balanced": is_balanced(g).balanced,
    }


def suite_switching(max_n: int = 6, seed: int = 0, count: int = 500, budget=None) -> SuiteResult:
    res = SuiteResult("switching")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = random_signed_graph(n, rng, p=rng.uniform(0.2, 0.9))
        x = [v for v in range(n) if rng.random() < 0.5]
        h = switch_at(g, x)
        res.instances += 1
        before, after = chromatic_profile(g, budget), chromatic_profile(h, budget)
        if before != after:
            return res.fail(g, switch=x, before=before, after=after)
        w = symset_chromatic(g, budget).witness
        if not is_proper(h, switch_coloring(w, x)):
            return res.fail(g, switch=x, error="switched coloring improper")
    return res


def suite_small_delta(max_n: int = 5, seed: int = 0, budget=None) -> SuiteResult:
    res = SuiteResult("small-delta")
    applicable = 0
    for g in signed_graphs(max_n):
        r = symset_chromatic(g, budget)
        res.instances += 1
        if r.value >= chromatic_number(g) or r.k_used == 0:
            continue
        has_triple = any(
            any(len(cls) == 3 for cls in _pair_classes(c).values())
            for c in enumerate_colorings(g, r.t_used, r.k_used, dedup=True)
        )
        if not has_triple:
            continue
        applicable += 1
        bound = g.max_degree() - r.k_used + 1
        if r.value > bound:
            return res.fail(g, chi_sym=r.value, k=r.k_used, delta=g.max_degree(), bound=bound)
    res.notes["applicable"] = applicable
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "brooks": suite_brooks,
    "complete": suite_complete,
    "circuit": suite_circuit,
    "expansion": suite_expansion,
    "turan": suite_turan,
    "spectrum-t": suite_spectrum_t,
    "spectrum-sym": suite_spectrum_sym,
    "deletion": suite_deletion,
    "frustration": suite_frustration,
    "restriction": suite_restriction,
    "dp-equiv": suite_dp_equiv,
    "chi-oracles": suite_chi_oracles,
    "switching": suite_switching,
    "small-delta": suite_small_delta,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0, budget: SolverBudget | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[name]
    kwargs = {"seed": seed, "budget": budget}
    if max_n is not None:
        kwargs["max_n"] = max_n
    return fn(**kwargs)
