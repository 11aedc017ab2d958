"""Corpus generation and the verification pipelines behind the ``verify-*`` commands.

Reports are JSON lines: one record per graph (or per check) in corpus order,
then a summary object. Records carry no timing data, so re-running a corpus
reproduces the record section byte for byte; the runtime lives in the summary.
"""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, Optional, TextIO

from .errors import BudgetExceeded
from .families import build_family, family_witness_ratio
from .forbidden import find_induced_path_union
from .graph import Graph, from_mask, omega, parse_graph6, to_graph6
from .toughness import cut_ratio, find_toughness_violation, parse_rational
from .twofactor import (
    ORACLE_MAX_N,
    check_lemma5,
    eta_of,
    find_tutte_pair_exhaustive,
    find_two_factor,
    odd_components,
    special_tutte_pair,
)

LABELED_MAX_N = 7
WORKERS_ENV = "TOUGHFACTOR_WORKERS"
_CHUNK = 4096


@dataclass
class VerificationReport:
    corpus: str
    records: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return self.summary.get("violations", 0)

    def lines(self) -> Iterator[str]:
        for rec in self.records:
            yield json.dumps(rec, sort_keys=True)
        yield json.dumps(self.summary, sort_keys=True)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


# --- corpora ----------------------------------------------------------------

def _edge_slots(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: column-major over the upper triangle
    return [(i, j) for j in range(1, n) for i in range(j)]


def _labeled_range(n: int, start: int, stop: int) -> Iterator[Graph]:
    bits = [(1 << i, 1 << j, i, j) for i, j in _edge_slots(n)]
    for code in range(start, stop):
        rows = [0] * n
        c = code
        while c:
            low = c & -c
            bi, bj, i, j = bits[low.bit_length() - 1]
            rows[i] |= bj
            rows[j] |= bi
            c ^= low
        yield Graph(n, tuple(rows))


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(n: int, max_n: int = LABELED_MAX_N) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, ordered by its graph6 bit vector."""
    if n > max_n:
        raise BudgetExceeded(f"labelled enumeration limited to n <= {max_n} (got {n}); ingest a graph6 corpus instead")
    if n < 0:
        raise ValueError("n must be non-negative")
    return _labeled_range(n, 0, labeled_count(n))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def read_graph6_corpus(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield parse_graph6(line.strip())


# Tasks are picklable corpus slices so workers can rebuild graphs themselves.
Task = tuple


def labeled_tasks(ns: Iterable[int], max_n: int = LABELED_MAX_N) -> Iterator[Task]:
    for n in ns:
        if n > max_n:
            raise BudgetExceeded(f"labelled enumeration limited to n <= {max_n} (got {n})")
        total = labeled_count(n)
        for start in range(0, total, _CHUNK):
            yield ("labeled", n, start, min(total, start + _CHUNK))


def graph6_tasks(graphs: Iterable[Graph]) -> Iterator[Task]:
    batch: list[str] = []
    for g in graphs:
        batch.append(to_graph6(g))
        if len(batch) == _CHUNK:
            yield ("g6", tuple(batch))
            batch = []
    if batch:
        yield ("g6", tuple(batch))


def _task_graphs(task: Task) -> Iterator[Graph]:
    if task[0] == "labeled":
        _, n, start, stop = task
        return _labeled_range(n, start, stop)
    return (parse_graph6(s) for s in task[1])


def _run_tasks(fn: Callable[[Task], list[dict]], tasks: Iterable[Task], workers: Optional[int]) -> Iterator[dict]:
    """Apply ``fn`` to every task and yield the records in task order."""
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        for task in tasks:
            yield from fn(task)
        return
    with Pool(workers) as pool:
        # imap keeps submission order, which is the corpus order.
        for recs in pool.imap(fn, tasks, chunksize=1):
            yield from recs


# --- main theorem -----------------------------------------------------------

@dataclass(frozen=True)
class TheoremSettings:
    t: Fraction = Fraction(3, 2)
    a: int = 4
    b: int = 10
    time_budget: Optional[float] = None


def _sorted(vs: Optional[Iterable[int]]) -> Optional[list[int]]:
    return None if vs is None else sorted(vs)


def theorem_record(g: Graph, cfg: TheoremSettings) -> dict[str, Any]:
    """Evaluate "t-tough and (P_a ∪ P_b)-free and n >= 3 implies a 2-factor" on one graph."""
    rec: dict[str, Any] = {
        "graph6": to_graph6(g), "n": g.n, "status": "checked",
        "tough": None, "tough_method": None, "tough_witness": None,
        "free": None, "free_witness": None, "two_factor": None, "violation": False,
    }
    if g.n < 3:
        rec["status"] = "below_min_order"
        return rec
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget

    if g.is_complete():
        rec["tough"], rec["tough_method"] = True, "complete"
    else:
        # The neighbourhood of a minimum-degree vertex is always a cut here.
        v = min(range(g.n), key=g.degree)
        ratio = cut_ratio(g, from_mask(g.rows[v]))
        if ratio is not None and ratio < cfg.t:
            rec["tough"], rec["tough_method"] = False, "min_degree_cut"
            rec["tough_witness"] = _sorted(from_mask(g.rows[v]))
        else:
            try:
                bad = find_toughness_violation(g, cfg.t, deadline=deadline)
            except BudgetExceeded as exc:
                rec["status"], rec["reason"] = "skipped", str(exc)
                return rec
            rec["tough"], rec["tough_method"] = bad is None, "exact"
            rec["tough_witness"] = _sorted(bad)
    if not rec["tough"]:
        rec["status"] = "hypothesis_fails"
        return rec

    union = find_induced_path_union(g, cfg.a, cfg.b)
    rec["free"] = union is None
    if union is not None:
        rec["free_witness"] = [list(union.path_a), list(union.path_b)]
        rec["status"] = "hypothesis_fails"
        return rec

    factor = find_two_factor(g)
    rec["two_factor"] = factor is not None
    if factor is None:
        rec["violation"] = True
        if g.n <= ORACLE_MAX_N:
            pair = special_tutte_pair(g)
            if pair is not None:
                rec["tutte_pair"] = {"S": sorted(pair.S), "T": sorted(pair.T), "eta": pair.eta}
    return rec


class _TheoremTask:
    def __init__(self, cfg: TheoremSettings) -> None:
        self.cfg = cfg

    def __call__(self, task: Task) -> list[dict]:
        return [theorem_record(g, self.cfg) for g in _task_graphs(task)]


def _summarise(corpus: str, records: Iterator[dict], sink: Optional[TextIO], keep: bool,
               report: VerificationReport, extra: dict[str, Any]) -> None:
    t0 = time.monotonic()
    counts: dict[str, int] = {}
    violations = 0
    total = 0
    violating: list[dict] = []
    for seq, rec in enumerate(records):
        rec = {"seq": seq, **rec}
        total += 1
        counts[rec["status"]] = counts.get(rec["status"], 0) + 1
        if rec["violation"]:
            violations += 1
            violating.append(rec)
        if sink is not None:
            sink.write(json.dumps(rec, sort_keys=True) + "\n")
        if keep:
            report.records.append(rec)
    report.summary = {
        "summary": True, "corpus": corpus, "graphs": total, "status_counts": dict(sorted(counts.items())),
        "violations": violations, "violating_seqs": [r["seq"] for r in violating],
        "runtime_seconds": round(time.monotonic() - t0, 3), **extra,
    }
    if not keep:
        report.records = violating
    if sink is not None:
        sink.write(json.dumps(report.summary, sort_keys=True) + "\n")


def verify_main_theorem(
    graphs: Iterable[Graph] | Iterable[Task],
    t: Fraction = Fraction(3, 2),
    a: int = 4,
    b: int = 10,
    *,
    corpus: str = "stream",
    sink: Optional[TextIO] = None,
    keep_records: bool = True,
    workers: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> VerificationReport:
    """Check the implication on every graph of ``graphs`` (graphs or pre-built tasks).

    Without ``keep_records`` only violating records stay in memory; ``sink``
    still receives every record.
    """
    cfg = TheoremSettings(Fraction(t), a, b, time_budget)
    items = iter(graphs)
    first = next(items, None)
    if first is None:
        tasks: Iterable[Task] = []
    elif isinstance(first, Graph):
        tasks = graph6_tasks(_chain(first, items))
    else:
        tasks = _chain(first, items)
    report = VerificationReport(corpus)
    extra = {"t": str(cfg.t), "pattern": f"P{a}+P{b}"}
    _summarise(corpus, _run_tasks(_TheoremTask(cfg), tasks, workers), sink, keep_records, report, extra)
    return report


def _chain(first: Any, rest: Iterator[Any]) -> Iterator[Any]:
    yield first
    yield from rest


# --- sharpness --------------------------------------------------------------

def verify_sharpness(l: int, m: int, freeness_max_n: int = 200) -> VerificationReport:
    """Machine-check the claims made about G(l, m): no 2-factor, eta = -2, ratio, 2P5-freeness."""
    t0 = time.monotonic()
    fw = build_family(l, m)
    g = fw.graph
    recs: list[dict[str, Any]] = []

    def check(name: str, passed: Optional[bool], **data: Any) -> None:
        status = "skipped" if passed is None else ("pass" if passed else "fail")
        recs.append({"check": name, "status": status, "violation": passed is False, **data})

    factor = find_two_factor(g)
    check("no_two_factor", factor is None, two_factor=factor is not None, method="gadget+blossom")

    pair = eta_of(g, fw.tutte_S, fw.tutte_T)
    odd = odd_components(g, fw.tutte_S, fw.tutte_T).odd
    expected_odd = {frozenset(bk) for bk in fw.A_blocks} | {frozenset(fw.B)}
    check("eta", pair.eta == -2 and pair.h == 2 * m + 2, eta=pair.eta, h=pair.h, expected_h=2 * m + 2,
          t_degrees_all_two=all(d == 2 for d in pair.degrees.values()),
          odd_components_are_A_blocks_and_B={c.vertices for c in odd} == expected_odd)

    ratio = family_witness_ratio(fw)
    check("witness_ratio", ratio == fw.formula_toughness and ratio >= Fraction(3, 2),
          ratio=str(ratio), formula=str(fw.formula_toughness), W_size=len(fw.W), components=omega(g, fw.W))

    if g.n <= freeness_max_n:
        union = find_induced_path_union(g, 5, 5)
        check("2P5_free", union is None, witness=None if union is None else [list(union.path_a), list(union.path_b)])
        union = find_induced_path_union(g, 4, 10)
        # A (P4 ∪ P10)-free member would contradict the main theorem.
        check("contains_P4_P10", union is not None,
              witness=None if union is None else [list(union.path_a), list(union.path_b)])
    else:
        check("2P5_free", None, reason=f"n = {g.n} exceeds freeness budget {freeness_max_n}")
        check("contains_P4_P10", None, reason=f"n = {g.n} exceeds freeness budget {freeness_max_n}")

    report = VerificationReport(f"G({l},{m})", recs)
    report.summary = {
        "summary": True, "corpus": report.corpus, "l": l, "m": m, "n": g.n,
        "checks": len(recs), "violations": sum(r["violation"] for r in recs),
        "skipped": sum(r["status"] == "skipped" for r in recs),
        "runtime_seconds": round(time.monotonic() - t0, 3),
    }
    return report


# --- special Tutte pair structure -------------------------------------------

def lemma5_record(g: Graph) -> dict[str, Any]:
    rec: dict[str, Any] = {"graph6": to_graph6(g), "n": g.n, "violation": False}
    pair = special_tutte_pair(g)
    if pair is None:
        rec["status"] = "has_two_factor"
        return rec
    rep = check_lemma5(g, pair)
    rec.update(
        status="checked", S=sorted(pair.S), T=sorted(pair.T), eta=pair.eta, h=pair.h,
        i=rep.t_independent, ii=rep.odd_neighbours_match_degree, iii=rep.single_t_attachment,
        iv=rep.large_components, three_halves_tough=rep.three_halves_tough, claim1=rep.claim1,
        violation=not rep.all_hold,
    )
    return rec


def _lemma5_task(task: Task) -> list[dict]:
    return [lemma5_record(g) for g in _task_graphs(task)]


def verify_lemma5(ns: Iterable[int], *, sink: Optional[TextIO] = None, keep_records: bool = False,
                  workers: Optional[int] = None) -> VerificationReport:
    ns = list(ns)
    report = VerificationReport(f"labeled n in {ns}")
    _summarise(report.corpus, _run_tasks(_lemma5_task, labeled_tasks(ns), workers), sink, keep_records, report, {})
    return report


# --- oracle equivalence -----------------------------------------------------

def oracle_record(g: Graph) -> dict[str, Any]:
    gadget = find_two_factor(g) is not None
    pair = find_tutte_pair_exhaustive(g)
    rec: dict[str, Any] = {"graph6": to_graph6(g), "n": g.n, "status": "checked",
                           "gadget": gadget, "tutte_criterion": pair is None}
    rec["violation"] = gadget != (pair is None)
    if pair is not None:
        rec["tutte_pair"] = {"S": sorted(pair.S), "T": sorted(pair.T), "eta": pair.eta}
    return rec


def _oracle_task(task: Task) -> list[dict]:
    return [oracle_record(g) for g in _task_graphs(task)]


def verify_oracle_equivalence(graphs: Iterable[Graph] | Iterable[Task], *, corpus: str = "stream",
                              sink: Optional[TextIO] = None, keep_records: bool = False,
                              workers: Optional[int] = None) -> VerificationReport:
    items = iter(graphs)
    first = next(items, None)
    if first is None:
        tasks: Iterable[Task] = []
    elif isinstance(first, Graph):
        tasks = graph6_tasks(_chain(first, items))
    else:
        tasks = _chain(first, items)
    report = VerificationReport(corpus)
    _summarise(corpus, _run_tasks(_oracle_task, tasks, workers), sink, keep_records, report, {})
    return report


def random_oracle_corpus(count: int, n_lo: int, n_hi: int, seed: int) -> list[Graph]:
    """Random graphs with ``n`` uniform in ``[n_lo, n_hi]`` and edge density uniform in [0.2, 0.8]."""
    rng = random.Random(seed)
    return [random_graph(rng.randint(n_lo, n_hi), rng.uniform(0.2, 0.8), rng) for _ in range(count)]


def parse_pattern(text: str) -> tuple[int, int]:
    """``"P4+P10"`` -> ``(4, 10)``."""
    parts = text.replace(" ", "").upper().replace("∪", "+").split("+")
    if len(parts) != 2 or not all(p.startswith("P") and p[1:].isdigit() for p in parts):
        raise ValueError(f"pattern must look like P4+P10, got {text!r}")
    return int(parts[0][1:]), int(parts[1][1:])


__all__ = [
    "VerificationReport", "enumerate_labeled_graphs", "labeled_tasks", "random_graph", "random_oracle_corpus",
    "read_graph6_corpus", "verify_main_theorem", "verify_sharpness", "verify_lemma5",
    "verify_oracle_equivalence", "theorem_record", "parse_pattern", "parse_rational",
]
