"""Command-line entry point: ``toughfactor <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .errors import BudgetExceeded, InputError, PreconditionError
from .families import build_family, family_witness_ratio
from .forbidden import find_induced_path_union
from .graph import Graph, read_graphs, to_graph6, write_edge_list
from .harness import (
    LABELED_MAX_N,
    graph6_tasks,
    labeled_tasks,
    parse_pattern,
    random_oracle_corpus,
    read_graph6_corpus,
    verify_lemma5,
    verify_main_theorem,
    verify_oracle_equivalence,
    verify_sharpness,
)
from .toughness import DEFAULT_MAX_N, INFINITE, is_t_tough, parse_rational, toughness_exact
from .twofactor import eta_of, find_two_factor, odd_components, special_tutte_pair


def _load_graph(path: str) -> Graph:
    if path == "-":
        graphs = list(read_graphs(sys.stdin))
    else:
        with open(path, encoding="ascii") as fh:
            graphs = list(read_graphs(fh))
    if len(graphs) != 1:
        raise InputError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"vertex list must be comma-separated integers, got {text!r}") from None


def _fmt(vs) -> str:
    return "{" + ", ".join(map(str, sorted(vs))) + "}"


def cmd_toughness(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    res = toughness_exact(g, max_n=args.max_n)
    print(f"toughness {res.value}")
    print("witness " + ("none (complete graph)" if res.witness is None else _fmt(res.witness)))
    return 0


def cmd_check_tough(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    ok, bad = is_t_tough(g, parse_rational(args.t), max_n=args.max_n)
    if ok:
        print(f"{args.t}-tough: yes")
        return 0
    print(f"{args.t}-tough: no")
    print(f"counter-witness {_fmt(bad)}")
    return 1


def cmd_check_free(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    a, b = parse_pattern(args.pattern)
    w = find_induced_path_union(g, a, b)
    if w is None:
        print(f"P{a}+P{b}-free: yes")
        return 0
    print(f"P{a}+P{b}-free: no")
    print("path_a " + " ".join(map(str, w.path_a)))
    print("path_b " + " ".join(map(str, w.path_b)))
    return 1


def cmd_two_factor(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    factor = find_two_factor(g)
    if factor is None:
        print("NONE")
        if args.certificate:
            pair = special_tutte_pair(g)
            if pair is not None:
                print(f"special Tutte pair S={_fmt(pair.S)} T={_fmt(pair.T)} eta={pair.eta} h={pair.h}")
    else:
        for cyc in factor.cycles:
            print(" ".join(map(str, cyc)))
    return 0


def cmd_eta(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    S, T = _vertex_list(args.S), _vertex_list(args.T)
    pair = eta_of(g, S, T)
    print(f"eta {pair.eta}")
    print(f"h {pair.h}")
    print("component\tedges_to_T\tparity\tclass")
    for comp in odd_components(g, S, T).components:
        parity = "odd" if comp.odd else "even"
        print(f"{_fmt(comp.vertices)}\t{comp.edges_to_t}\t{parity}\t{comp.strength or '-'}")
    return 0


def cmd_gen_family(args: argparse.Namespace) -> int:
    fw = build_family(args.l, args.m)
    text = to_graph6(fw.graph) + "\n" if args.format == "graph6" else write_edge_list(fw.graph)
    if args.output:
        Path(args.output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if args.emit_witnesses is not None:
        side = {
            "l": fw.l, "m": fw.m, "n": fw.graph.n, "classes": fw.classes(),
            "tutte_S": sorted(fw.tutte_S), "tutte_T": sorted(fw.tutte_T), "W": sorted(fw.W),
            "witness_ratio": str(family_witness_ratio(fw)), "formula_toughness": str(fw.formula_toughness),
        }
        Path(args.emit_witnesses).write_text(json.dumps(side, indent=2) + "\n", encoding="utf-8")
    return 0


def _emit(report, report_path: Optional[str]) -> int:
    # Sweeps keep only violating records in memory. With a report file the
    # full stream is already on disk, so stdout repeats just the violations.
    if report_path:
        for rec in report.records:
            if rec.get("violation"):
                print(json.dumps(rec, sort_keys=True))
        print(json.dumps(report.summary, sort_keys=True))
    else:
        for line in report.lines():
            print(line)
    return 1 if report.violations else 0


def _open_report(path: Optional[str]):
    return open(path, "w", encoding="utf-8") if path else None


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    t = parse_rational(args.t)
    a, b = parse_pattern(args.pattern)
    sink = _open_report(args.report)
    try:
        if args.corpus:
            with open(args.corpus, encoding="ascii") as fh:
                report = verify_main_theorem(read_graph6_corpus(fh), t, a, b, corpus=args.corpus, sink=sink,
                                             keep_records=False, time_budget=args.time_budget)
        else:
            ns = range(args.n_min, args.n_max + 1)
            report = verify_main_theorem(labeled_tasks(ns), t, a, b, corpus=f"labeled n={args.n_min}..{args.n_max}",
                                         sink=sink, keep_records=False, time_budget=args.time_budget)
    finally:
        if sink:
            sink.close()
    return _emit(report, args.report)


def cmd_verify_sharpness(args: argparse.Namespace) -> int:
    return _emit(verify_sharpness(args.l, args.m, freeness_max_n=args.freeness_max_n), None)


def cmd_verify_lemma5(args: argparse.Namespace) -> int:
    sink = _open_report(args.report)
    try:
        report = verify_lemma5(range(args.n_min, args.n_max + 1), sink=sink)
    finally:
        if sink:
            sink.close()
    return _emit(report, args.report)


def cmd_verify_oracle(args: argparse.Namespace) -> int:
    sink = _open_report(args.report)
    try:
        tasks = list(labeled_tasks(range(0, args.n_max + 1)))
        extra = random_oracle_corpus(args.random, args.n_lo, args.n_hi, args.seed) if args.random else []
        report = verify_oracle_equivalence(tasks + list(graph6_tasks(extra)), sink=sink,
                                           corpus=f"labeled n<={args.n_max} + {args.random} random")
    finally:
        if sink:
            sink.close()
    return _emit(report, args.report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toughfactor", description="Toughness, 2-factors and forbidden induced paths.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph file (graph6 line or 'n m' edge list); '-' for stdin")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("toughness", cmd_toughness, "exact toughness with a minimising cut")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp = graph_cmd("check-tough", cmd_check_tough, "exit 0 iff the graph is t-tough")
    sp.add_argument("--t", required=True, help="threshold as p/q")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp = graph_cmd("check-free", cmd_check_free, "exit 0 iff the graph has no induced Pa+Pb")
    sp.add_argument("--pattern", required=True, help="e.g. P4+P10")
    sp = graph_cmd("two-factor", cmd_two_factor, "print the cycles of a 2-factor, or NONE")
    sp.add_argument("--certificate", action="store_true", help="print a special Tutte pair when there is no 2-factor")
    sp = graph_cmd("eta", cmd_eta, "eta(S, T), h(S, T) and the odd-component table")
    sp.add_argument("--S", default="", help="comma-separated vertices")
    sp.add_argument("--T", default="", help="comma-separated vertices")

    sp = sub.add_parser("gen-family", help="build G(l, m)")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sp.add_argument("--output", help="graph file (default stdout)")
    sp.add_argument("--emit-witnesses", nargs="?", const="family_witness.json", default=None, metavar="PATH",
                    help="write S, T, W and the vertex classes as JSON")
    sp.set_defaults(func=cmd_gen_family)

    sp = sub.add_parser("verify-theorem", help="check the 3/2-tough (P4+P10)-free => 2-factor implication")
    sp.add_argument("--n-max", type=int, default=LABELED_MAX_N)
    sp.add_argument("--n-min", type=int, default=3)
    sp.add_argument("--t", default="3/2")
    sp.add_argument("--pattern", default="P4+P10")
    sp.add_argument("--corpus", help="graph6 file to check instead of the labelled enumeration")
    sp.add_argument("--report", help="write every per-graph record (JSON lines) here")
    sp.add_argument("--time-budget", type=float, default=None, help="seconds per graph before it is skipped")
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("verify-sharpness", help="check the claims about G(l, m)")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--freeness-max-n", type=int, default=200)
    sp.set_defaults(func=cmd_verify_sharpness)

    sp = sub.add_parser("verify-lemma5", help="check special Tutte pair properties on all small graphs")
    sp.add_argument("--n-max", type=int, default=LABELED_MAX_N)
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_verify_lemma5)

    sp = sub.add_parser("verify-oracle", help="gadget+blossom vs exhaustive Tutte criterion")
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--random", type=int, default=1000)
    sp.add_argument("--n-lo", type=int, default=7)
    sp.add_argument("--n-hi", type=int, default=12)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_verify_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
