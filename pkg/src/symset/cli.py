"""Command line interface.

Exit codes: 0 success/pass, 1 negative answer (unbalanced, no coloring,
counterexample), 2 usage or parse error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .colors import canonicalize
from .constructions import complete_graph, cycle_graph, path_graph, signed_circuit, signed_complete, signed_expansion, turan_witness
from .dp import build_cover, independent_transversal, transversal_to_coloring
from .graph import GraphError, frustration_index, is_balanced
from .io import GraphFileError, format_graph, parse_graph, read_graph
from .report import ReportEnvelope, digest, plot_spectrum, plot_t_profile
from .solver import (
    BudgetExhausted,
    InadmissibleT,
    SolverBudget,
    chromatic_number,
    find_coloring,
    symset_chromatic,
    symset_t_chromatic,
)
from .spectrum import SpectrumError, symset_spectrum, t_spectrum
from .verify import SUITES, run_suite

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_NODE_LIMIT = 10**8


class UsageError(Exception):
    pass


def _load(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph(text), digest(text)


def _budget(args) -> SolverBudget:
    return SolverBudget(node_limit=args.budget)


def _emit(env: ReportEnvelope, args, budget: SolverBudget | None = None) -> None:
    if budget is not None:
        env.nodes = budget.nodes
        env.seconds = budget.elapsed
    print(env.render(args.format))


def _neg_edges(g) -> list[list[int]]:
    return [[u, v] for u, v in g.negative_edges()]


def cmd_balance(args) -> int:
    g, dig = _load(args.file)
    cert = is_balanced(g)
    result = {"balanced": cert.balanced}
    if cert.balanced:
        a, b = cert.partition
        result["partition"] = [sorted(a), sorted(b)]
    else:
        result["witness_circuit"] = list(cert.witness_circuit)
    _emit(ReportEnvelope("balance", args.argv, dig, result), args)
    return EXIT_OK if cert.balanced else EXIT_NO


def cmd_frustration(args) -> int:
    g, dig = _load(args.file)
    result = {"frustration_index": frustration_index(g), "balanced": is_balanced(g).balanced}
    _emit(ReportEnvelope("frustration", args.argv, dig, result), args)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    g, dig = _load(args.file)
    budget = _budget(args)
    chi = chromatic_number(g, budget)
    if args.sym:
        r = symset_chromatic(g, budget)
    else:
        r = symset_t_chromatic(g, args.t, budget)
    witness = canonicalize(r.witness)
    result = {
        "value": r.value,
        "t_used": r.t_used,
        "k_used": r.k_used,
        "chi": chi,
        "coloring": [f"{v}:{c}" for v, c in enumerate(witness.names())],
    }
    env = ReportEnvelope("chromatic", args.argv, dig, result)
    if args.plot:
        values = {t: symset_t_chromatic(g, t, budget).value for t in range(chi + 1)}
        env.figures.append(str(plot_t_profile(values, chi, g.max_degree(), args.plot, Path(args.file).name)))
    _emit(env, args, budget)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    base, dig = _load(args.file)
    budget = _budget(args)
    if args.sym:
        spec = symset_spectrum(base, budget, sample=args.sample, seed=args.seed)
    else:
        spec = t_spectrum(base, args.t, budget, sample=args.sample, seed=args.seed)
    result = {
        "t": "sym" if spec.t is None else spec.t,
        "values": spec.values,
        "min": spec.min,
        "max": spec.max,
        "classes": spec.classes,
        "sampled": spec.sampled,
        "witnesses": {str(v): {"negative_edges": _neg_edges(g)} for v, g in spec.witnesses.items()},
        "class_counts": {str(v): c for v, c in sorted(spec.counts.items())},
    }
    if spec.sampled:
        result["note"] = "sampled classes only; values are a subset of the spectrum"
    env = ReportEnvelope("spectrum", args.argv, dig, result)
    if args.plot:
        env.figures.append(str(plot_spectrum(spec, args.plot, Path(args.file).name)))
    _emit(env, args, budget)
    return EXIT_OK


def _parse_edge_list(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, text.split(",")):
        try:
            u, v = item.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise UsageError(f"bad edge {item!r}; use u-v,u-v") from None
    return out


def _named_base(kind: str, rest: list[str]):
    if kind == "file":
        return read_graph(rest[0])
    n = int(rest[0])
    return {"complete": complete_graph, "cycle": cycle_graph, "path": path_graph}[kind](n)


def cmd_construct(args) -> int:
    fam, params = args.family, args.params
    try:
        if fam == "turan":
            g = turan_witness(int(params[0]), int(params[1]))
        elif fam == "cycle":
            if params[1] not in ("balanced", "unbalanced"):
                raise UsageError("cycle takes N balanced|unbalanced")
            g = signed_circuit(int(params[0]), params[1] == "balanced")
        elif fam == "complete":
            g = signed_complete(int(params[0]), _parse_edge_list(params[1]) if len(params) > 1 else [])
        elif fam == "pm-expansion":
            if params[0] not in ("complete", "cycle", "path", "file"):
                raise UsageError("pm-expansion takes complete|cycle|path N or file PATH")
            g = signed_expansion(_named_base(params[0], params[1:]))
        else:
            raise UsageError(f"unknown family {fam!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise UsageError(f"bad parameters for {fam}: {' '.join(params)}") from None
    text = format_graph(g, comment=f"{fam} {' '.join(params)}")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        result = {"family": fam, "n": g.n, "edges": g.num_edges, "out": args.out}
        _emit(ReportEnvelope("construct", args.argv, digest(text), result), args)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _budget(args)
    res = run_suite(args.suite, args.max_n, args.seed, budget)
    result = {"suite": res.name, "passed": res.passed, "instances": res.instances, **res.notes}
    if res.counterexample:
        result["counterexample"] = res.counterexample
    _emit(ReportEnvelope("verify", args.argv, None, result), args, budget)
    return EXIT_OK if res.passed else EXIT_NO


def cmd_dp_check(args) -> int:
    g, dig = _load(args.file)
    budget = _budget(args)
    cover = build_cover(g, args.t, args.k)
    tr = independent_transversal(cover, budget)
    col = find_coloring(g, args.t, args.k, budget)
    result = {
        "t": args.t,
        "k": args.k,
        "labels": [cover.label_name(a) for a in range(cover.num_labels)],
        "transversal": None if tr is None else [cover.label_name(a) for a in tr.pick],
        "colorable": col is not None,
        "agree": (tr is None) == (col is None),
    }
    if tr is not None:
        result["coloring"] = transversal_to_coloring(cover, tr).names()
    _emit(ReportEnvelope("dp-check", args.argv, dig, result), args, budget)
    return EXIT_OK if tr is not None else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symset", description="Symmetric set coloring of signed graphs.")
    p.add_argument("--format", choices=("plain", "machine"), default="plain")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_NODE_LIMIT, help="search node limit")
        sp.add_argument("--format", choices=("plain", "machine"), default=argparse.SUPPRESS)

    sp = sub.add_parser("balance", help="test balance, print Harary partition or negative circuit")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("plain", "machine"), default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_balance)

    sp = sub.add_parser("frustration", help="exact frustration index")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("plain", "machine"), default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_frustration)

    sp = sub.add_parser("chromatic", help="symset t-chromatic or symset chromatic number")
    sp.add_argument("file")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--t", type=int)
    mode.add_argument("--sym", action="store_true")
    sp.add_argument("--plot", metavar="PNG", help="write the chi^t_sym profile figure")
    with_budget(sp)
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("spectrum", help="chromatic spectrum over all switching classes")
    sp.add_argument("file")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--t", type=int)
    mode.add_argument("--sym", action="store_true")
    sp.add_argument("--sample", type=int, help="solve only this many random classes")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--plot", metavar="PNG", help="write a class-count bar chart")
    with_budget(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("construct", help="write a named signed graph")
    sp.add_argument("family", choices=("turan", "cycle", "complete", "pm-expansion"))
    sp.add_argument("params", nargs="*")
    sp.add_argument("--out")
    sp.add_argument("--format", choices=("plain", "machine"), default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="run a theorem verification suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    with_budget(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dp-check", help="DP-cover transversal vs direct coloring")
    sp.add_argument("file")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    with_budget(sp)
    sp.set_defaults(func=cmd_dp_check)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = ["symset", *argv]
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InadmissibleT as exc:
        print(f"error: t={exc.t} exceeds chi(G)={exc.chi}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFileError, GraphError, UsageError, OSError, ValueError, SpectrumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
