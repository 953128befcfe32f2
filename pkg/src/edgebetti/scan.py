"""Corpus sweeps: run the law checks over many graphs and summarise."""

from __future__ import annotations

import json
import logging
import os
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph import Graph, enumerate_graphs, read_graph6_lines, to_graph6
from .hochster import SCHEMA_VERSION, BudgetExceeded, betti_table, max_shifts
from .homology import check_field
from .laws import ALL_LAWS, ERROR, FAIL, NOT_APPLICABLE, PASS, SKIPPED, CheckReport, ceil_three_halves, check_all

log = logging.getLogger(__name__)

THREADS_ENV = "EDGEBETTI_THREADS"
STATUSES = (PASS, FAIL, NOT_APPLICABLE, SKIPPED, ERROR)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    corpus: str | None = None
    enumerate_n: int | None = None
    fields: tuple[int, ...] = (2,)
    laws: tuple[str, ...] = ALL_LAWS
    r_max: int | None = None
    mv_samples: int = 32
    threads: int = 1
    budget_ms: float | None = None
    out: str | None = None
    timings: bool = True

    def __post_init__(self):
        if self.corpus is None and self.enumerate_n is None:
            raise ValueError("need an input corpus or a built-in enumeration size")
        self.fields = tuple(check_field(p) for p in self.fields)
        if not self.fields:
            raise ValueError("at least one field characteristic is required")
        unknown = set(self.laws) - set(ALL_LAWS)
        if unknown:
            raise ValueError(f"unknown laws: {sorted(unknown)}")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.budget_ms is not None and self.budget_ms <= 0:
            raise ValueError("budget must be positive")
        if self.mv_samples < 0:
            raise ValueError("mv-samples must be non-negative")


def iter_corpus(config: RunConfig) -> Iterator[Graph]:
    if config.enumerate_n is not None:
        for n in range(1, config.enumerate_n + 1):
            yield from enumerate_graphs(n)
    if config.corpus is not None:
        with open(config.corpus) as fh:
            yield from read_graph6_lines(fh)


@dataclass
class GraphResult:
    index: int
    graph6: str
    reports: list[dict]
    shifts: list[int] | None = None  # for the first field


def _process(job) -> GraphResult:
    index, g, config = job
    g6 = to_graph6(g)
    budget = None if config.budget_ms is None else config.budget_ms / 1000
    try:
        tables = {p: betti_table(g, p, budget_s=budget) for p in config.fields}
        reports = check_all(g, config.fields, config.laws, config.r_max, config.mv_samples, tables=tables)
        shifts = list(max_shifts(tables[config.fields[0]]).t)
    except BudgetExceeded as exc:
        log.warning("graph %d (%s) skipped: %s", index, g6, exc)
        reports = [CheckReport(law, SKIPPED, {"reason": str(exc)}, p=p, graph6=g6) for p in config.fields for law in config.laws]
        shifts = None
    except Exception as exc:  # keep the scan going; surface the failure as a record
        log.error("graph %d (%s) failed: %s", index, g6, exc)
        reports = [CheckReport(law, ERROR, {"reason": repr(exc)}, p=p, graph6=g6) for p in config.fields for law in config.laws]
        shifts = None
    records = []
    for r in reports:
        rec = r.to_dict(config.timings)
        rec["index"] = index
        records.append(rec)
    records.sort(key=lambda rec: (rec["law"], rec["p"]))
    return GraphResult(index, g6, records, shifts)


@dataclass
class ScanSummary:
    graphs: int = 0
    tallies: dict = field(default_factory=dict)  # "law@p" -> {status: count}
    hypothesis: dict = field(default_factory=dict)
    extremal: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def failures(self) -> int:
        return sum(c.get(FAIL, 0) for c in self.tallies.values())

    @property
    def errors(self) -> int:
        return sum(c.get(ERROR, 0) for c in self.tallies.values())

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "graphs": self.graphs,
            "tallies": self.tallies,
            "hypothesis": self.hypothesis,
            "extremal": self.extremal,
            "failures": self.failures,
        }
        if timings:
            out["elapsed_s"] = round(self.elapsed, 6)
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True)


def _statistics(results: list[GraphResult]) -> tuple[dict, dict]:
    with_b = Counter()
    meets = Counter()  # t_b >= ceil(3b/2)
    below = Counter()  # t_a < 2a
    top = defaultdict(lambda: {"count": 0, "first": None})
    mid = defaultdict(lambda: {"count": 0, "first": None})
    for res in results:
        if res.shifts is None:
            continue
        for b, tb in enumerate(res.shifts):
            if b == 0:
                continue
            with_b[b] += 1
            meets[b] += tb >= ceil_three_halves(b)
            below[b] += tb < 2 * b
            for table, hit in ((top, tb == 2 * b), (mid, tb == ceil_three_halves(b))):
                if hit:
                    table[b]["count"] += 1
                    table[b]["first"] = table[b]["first"] or res.graph6
    hypothesis = {
        str(b): {
            "graphs_with_pd_at_least_b": with_b[b],
            "frac_t_b_at_least_ceil_3b_2": meets[b] / with_b[b],
            "frac_t_b_below_2b": below[b] / with_b[b],
        }
        for b in sorted(with_b)
    }
    extremal = {
        "t_i_eq_2i": {str(i): dict(v) for i, v in sorted(top.items())},
        "t_i_eq_ceil_3i_2": {str(i): dict(v) for i, v in sorted(mid.items())},
    }
    return hypothesis, extremal


def run_scan(config: RunConfig, graphs: Iterable[Graph] | None = None) -> tuple[ScanSummary, list[GraphResult]]:
    """Check every graph; results come back in corpus order regardless of ``threads``."""
    start = time.perf_counter()
    graphs = iter_corpus(config) if graphs is None else graphs
    jobs = [(k, g, config) for k, g in enumerate(graphs)]
    if config.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(_process, jobs, chunksize=max(1, len(jobs) // (config.threads * 8))))
    else:
        results = [_process(job) for job in jobs]
    results.sort(key=lambda r: r.index)

    tallies: dict[str, Counter] = {f"{law}@{p}": Counter({s: 0 for s in STATUSES}) for law in config.laws for p in config.fields}
    for res in results:
        for rec in res.reports:
            tallies[f"{rec['law']}@{rec['p']}"][rec["status"]] += 1
    hypothesis, extremal = _statistics(results)
    summary = ScanSummary(
        graphs=len(results),
        tallies={k: dict(v) for k, v in sorted(tallies.items())},
        hypothesis=hypothesis,
        extremal=extremal,
        elapsed=time.perf_counter() - start,
    )
    return summary, results


def result_lines(results: list[GraphResult], only_failures: bool = False) -> list[str]:
    lines = []
    for res in results:
        for rec in res.reports:
            if only_failures and rec["status"] != FAIL:
                continue
            lines.append(json.dumps(rec, sort_keys=True))
    return lines


def canonical_jsonl(lines: Iterable[str]) -> str:
    """Drop timing fields and sort by (graph index, law, p) for byte comparison."""
    recs = []
    for line in lines:
        if line.strip():
            rec = json.loads(line)
            rec.pop("elapsed_us", None)
            recs.append(rec)
    recs.sort(key=lambda r: (r.get("index", -1), r["law"], r["p"] or 0))
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in recs)


def write_outputs(out_dir: str, summary: ScanSummary, results: list[GraphResult], timings: bool = True) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "summary.json"), "w") as fh:
        fh.write(json.dumps(summary.to_dict(timings), sort_keys=True, indent=2) + "\n")
    for name, only_failures in (("results.jsonl", False), ("violations.jsonl", True)):
        with open(os.path.join(out_dir, name), "w") as fh:
            fh.writelines(line + "\n" for line in result_lines(results, only_failures))
