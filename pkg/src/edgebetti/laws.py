"""Executable checks for vanishing patterns and shift bounds of edge-ideal resolutions.

Each checker returns a ``CheckReport``. A failing report carries a plain-dict
``violation`` that :func:`recheck` can confirm without rerunning the sweep.
"""

from __future__ import annotations

import itertools
import json
import random
import time
import zlib
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, enumerate_matchings, induced_subgraph, matching_vertices, members, parse_graph6, to_graph6
from .hochster import SCHEMA_VERSION, BettiTable, ShiftVector, betti_table, max_shifts, strand
from .homology import check_field, reduced_betti_vector

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
SKIPPED = "skipped"
ERROR = "error"


def ceil_three_halves(b: int) -> int:
    return (3 * b + 1) // 2


@dataclass
class CheckReport:
    law: str
    status: str
    violation: dict | None = None
    elapsed: float = 0.0
    p: int | None = None
    graph6: str | None = None
    checked: int = 0  # instances examined

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "law": self.law,
            "status": self.status,
            "violation": self.violation,
            "graph6": self.graph6,
            "p": self.p,
            "checked": self.checked,
        }
        if timings:
            out["elapsed_us"] = int(self.elapsed * 1e6)
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def _shifts(t) -> ShiftVector:
    if isinstance(t, BettiTable):
        return max_shifts(t)
    if isinstance(t, ShiftVector):
        return t
    return ShiftVector(tuple(t))


def _pairs(pd: int, b_values: Iterable[int]):
    b_values = list(b_values)
    for a in range(pd + 1):
        for b in b_values:
            if a + b <= pd:
                yield a, b


def _sum_bound_violation(t: ShiftVector, a: int, b: int) -> dict | None:
    if t[a + b] > t[a] + t[b]:
        return {"a": a, "b": b, "t_a": t[a], "t_b": t[b], "t_ab": t[a + b], "bound": t[a] + t[b], "t": list(t)}
    return None


def check_subadditivity(t, b_max: int | None = None, law: str = "subadditivity") -> CheckReport:
    """``t_{a+b} <= t_a + t_b`` for every ``a, b >= 0`` with ``a + b <= pd``."""
    with _Timer() as timer:
        sv = _shifts(t)
        top = sv.pd if b_max is None else min(b_max, sv.pd)
        violation, checked = None, 0
        for a, b in _pairs(sv.pd, range(0, top + 1)):
            checked += 1
            violation = _sum_bound_violation(sv, a, b)
            if violation:
                break
    return CheckReport(law, FAIL if violation else PASS, violation, timer.elapsed, checked=checked)


def check_b4_subadditivity(t) -> CheckReport:
    """Subadditivity restricted to ``1 <= b <= 4``."""
    with _Timer() as timer:
        sv = _shifts(t)
        violation, checked = None, 0
        for a, b in _pairs(sv.pd, range(1, min(4, sv.pd) + 1)):
            checked += 1
            violation = _sum_bound_violation(sv, a, b)
            if violation:
                break
    return CheckReport("b4_subadditivity", FAIL if violation else PASS, violation, timer.elapsed, checked=checked)


def check_taylor_bounds(t) -> CheckReport:
    """``t_0 = 0`` and ``i < t_i <= 2i`` for ``1 <= i <= pd``."""
    with _Timer() as timer:
        sv = _shifts(t)
        violation = None
        for i, ti in enumerate(sv.t):
            ok = ti == 0 if i == 0 else i < ti <= 2 * i
            if not ok:
                violation = {"i": i, "t_i": ti, "t": list(sv.t)}
                break
    return CheckReport("taylor_bounds", FAIL if violation else PASS, violation, timer.elapsed, checked=len(sv))


def check_corner_vanishing(table: BettiTable) -> CheckReport:
    """``beta_{i,i+j} = 0 = beta_{i,i+j+1}`` forces ``beta_{i+1,i+j+2} = 0``."""
    with _Timer() as timer:
        violation, checked = None, 0
        for i in range(table.pd + 1):
            for j in range(0, i + 2):
                checked += 1
                b0, b1, b2 = table[i, i + j], table[i, i + j + 1], table[i + 1, i + j + 2]
                if b0 == 0 and b1 == 0 and b2 != 0:
                    violation = {"i": i, "j": j, "beta_i_ij": b0, "beta_i_ij1": b1, "beta_next": b2}
                    break
            if violation:
                break
    return CheckReport("corner_vanishing", FAIL if violation else PASS, violation, timer.elapsed, checked=checked)


def check_strand_contiguity(table: BettiTable, offset: int = 2) -> CheckReport:
    """``{i : beta_{i,i+offset} != 0}`` is a set of consecutive integers.

    This reads the strand-vanishing lemma for edge ideals as contiguity of a
    single strand; the published statement mixes its indices.
    """
    with _Timer() as timer:
        idx = sorted(strand(table, offset))
        violation = None
        if idx:
            gaps = sorted(set(range(idx[0], idx[-1] + 1)) - set(idx))
            if gaps:
                violation = {"offset": offset, "strand": idx, "gap": gaps[0]}
    return CheckReport("strand_contiguity", FAIL if violation else PASS, violation, timer.elapsed, checked=len(idx))


def check_halfshift_bound(t) -> CheckReport:
    """For ``a >= 2`` with ``t_a < 2a``: ``t_{a+b} <= t_a + ceil(3b/2)``."""
    with _Timer() as timer:
        sv = _shifts(t)
        qualifying = [a for a in range(2, sv.pd + 1) if sv[a] < 2 * a]
        violation, checked = None, 0
        for a in qualifying:
            for b in range(0, sv.pd - a + 1):
                checked += 1
                bound = sv[a] + ceil_three_halves(b)
                if sv[a + b] > bound:
                    violation = {"a": a, "b": b, "t_a": sv[a], "t_ab": sv[a + b], "bound": bound, "t": list(sv.t)}
                    break
            if violation:
                break
    status = FAIL if violation else (PASS if qualifying else NOT_APPLICABLE)
    return CheckReport("halfshift_bound", status, violation, timer.elapsed, checked=checked)


def check_hypothesis_subadditivity(t) -> CheckReport:
    """For every ``b`` with ``t_b >= ceil(3b/2)``: ``t_{a+b} <= t_a + t_b`` for all ``a``."""
    with _Timer() as timer:
        sv = _shifts(t)
        qualifying = [b for b in range(sv.pd + 1) if sv[b] >= ceil_three_halves(b)]
        violation, checked = None, 0
        for a, b in _pairs(sv.pd, qualifying):
            checked += 1
            violation = _sum_bound_violation(sv, a, b)
            if violation:
                violation["threshold"] = ceil_three_halves(b)
                break
    status = FAIL if violation else (PASS if qualifying else NOT_APPLICABLE)
    return CheckReport("hypothesis_subadditivity", status, violation, timer.elapsed, checked=checked)


def check_pd9(t) -> CheckReport:
    """Full subadditivity when ``pd <= 9``; beyond that only when
    ``t_j >= ceil(3j/2)`` for all ``5 <= j <= pd // 2``."""
    sv = _shifts(t)
    if sv.pd > 9 and any(sv[j] < ceil_three_halves(j) for j in range(5, sv.pd // 2 + 1)):
        return CheckReport("pd9", NOT_APPLICABLE)
    report = check_subadditivity(sv, law="pd9")
    return report


def check_matching_degree_lemma(g: Graph, t, a: int | None = None, r_max: int | None = None) -> CheckReport:
    """If ``t_a < 2a`` then no matching of size ``r > a`` induces a perfect matching.

    Equivalently the endpoints of every such matching induce a vertex of degree
    at least 2. ``a=None`` checks every ``2 <= a <= pd``; ``a > pd`` is not
    applicable because ``t_a`` is undefined there.
    """
    with _Timer() as timer:
        sv = _shifts(t)
        r_top = g.n // 2 if r_max is None else r_max
        a_values = range(2, sv.pd + 1) if a is None else [a]
        applicable, violation, checked = False, None, 0
        for a_ in a_values:
            if a_ < 2:
                raise ValueError("matching lemma needs a >= 2")
            if a_ > sv.pd or sv[a_] >= 2 * a_:
                continue
            applicable = True
            for r in range(a_ + 1, r_top + 1):
                for m in enumerate_matchings(g, r):
                    checked += 1
                    w = matching_vertices(m)
                    if max(g.degree(v, within=w) for v in members(w)) < 2:
                        violation = {
                            "a": a_,
                            "t_a": sv[a_],
                            "r": r,
                            "matching": [list(e) for e in m],
                            "graph6": to_graph6(g),
                        }
                        break
                if violation:
                    break
            if violation:
                break
    status = FAIL if violation else (PASS if applicable else NOT_APPLICABLE)
    return CheckReport("matching_degree", status, violation, timer.elapsed, graph6=to_graph6(g), checked=checked)


def mayer_vietoris_pieces(g: Graph, w: int, v: int, xs: int, p: int = 2):
    """Reduced Betti vectors of ``N = Ind(G[w])``, ``N - v``, ``N - xs`` and their intersection."""
    if not w >> v & 1:
        raise ValueError(f"vertex {v} not in W")
    if not xs or xs & ~(g.adj[v] & w):
        raise ValueError("xs must be a nonempty set of neighbours of v inside W")
    return (
        reduced_betti_vector(g, p, w),
        reduced_betti_vector(g, p, w & ~(1 << v)),
        reduced_betti_vector(g, p, w & ~xs),
        reduced_betti_vector(g, p, w & ~xs & ~(1 << v)),
    )


def _mv_violation(g: Graph, w: int, v: int, xs: int, p: int) -> dict | None:
    whole, first, second, inter = mayer_vietoris_pieces(g, w, v, xs, p)
    base = {"graph6": to_graph6(g), "w": w, "v": v, "xs": xs, "p": p}
    top = max(whole.top_degree, first.top_degree, second.top_degree, inter.top_degree + 1)
    for d in range(-1, top + 1):
        bound = first[d] + second[d] + inter[d - 1]
        if whole[d] > bound:
            return {**base, "kind": "rank", "d": d, "observed": whole[d], "bound": bound}
    lhs = whole.euler_characteristic()
    rhs = first.euler_characteristic() + second.euler_characteristic() - inter.euler_characteristic()
    if lhs != rhs:
        return {**base, "kind": "euler", "observed": lhs, "bound": rhs}
    return None


def check_mayer_vietoris(g: Graph, w: int, v: int, xs: int, p: int = 2) -> CheckReport:
    """Split ``N = Ind(G[w])`` as ``(N - v) U (N - xs)`` and test the long-exact-sequence bounds:
    ``b_d(N) <= b_d(N - v) + b_d(N - xs) + b_{d-1}(intersection)`` for all ``d`` and
    additivity of the reduced Euler characteristic.
    """
    p = check_field(p)
    with _Timer() as timer:
        violation = _mv_violation(g, w, v, xs, p)
    return CheckReport("mayer_vietoris", FAIL if violation else PASS, violation, timer.elapsed, p, to_graph6(g), 1)


def random_mv_instance(g: Graph, rng: random.Random):
    """A random ``(w, v, xs)`` with ``xs`` a nonempty set of ``v``'s neighbours in ``G[w]``."""
    edges = g.edges()
    if not edges:
        return None
    u0, u1 = rng.choice(edges)
    w = (1 << u0) | (1 << u1) | (rng.getrandbits(g.n) & g.full_set)
    candidates = [u for u in members(w) if g.adj[u] & w]
    v = rng.choice(candidates)
    nbrs = members(g.adj[v] & w)
    xs = 0
    while not xs:
        xs = sum(1 << u for u in nbrs if rng.random() < 0.5)
    return w, v, xs


def mv_instances(g: Graph, samples: int = 32, seed: int | None = None, exhaustive_n: int = 8):
    """Decompositions to test: every ``(v, xs)`` on the full vertex set when
    ``g.n <= exhaustive_n``, plus ``samples`` random ones (seeded from the graph)."""
    out = []
    full = g.full_set
    if g.n <= exhaustive_n:
        for v in range(g.n):
            nbrs = members(g.adj[v])
            for size in range(1, len(nbrs) + 1):
                for combo in itertools.combinations(nbrs, size):
                    out.append((full, v, sum(1 << u for u in combo)))
    rng = random.Random(zlib.crc32(to_graph6(g).encode()) if seed is None else seed)
    for _ in range(samples):
        inst = random_mv_instance(g, rng)
        if inst is None:
            break
        out.append(inst)
    return out


def check_mayer_vietoris_family(g: Graph, p: int = 2, samples: int = 32, seed: int | None = None) -> CheckReport:
    with _Timer() as timer:
        instances = mv_instances(g, samples, seed)
        violation = None
        for w, v, xs in instances:
            violation = _mv_violation(g, w, v, xs, p)
            if violation:
                break
    status = FAIL if violation else (PASS if instances else NOT_APPLICABLE)
    return CheckReport("mayer_vietoris", status, violation, timer.elapsed, p, to_graph6(g), len(instances))


TABLE_LAWS = (
    "taylor_bounds",
    "corner_vanishing",
    "strand_contiguity",
    "subadditivity",
    "b4_subadditivity",
    "halfshift_bound",
    "hypothesis_subadditivity",
    "pd9",
)
GRAPH_LAWS = ("matching_degree", "mayer_vietoris")
ALL_LAWS = TABLE_LAWS + GRAPH_LAWS


def check_table(table: BettiTable, laws: Iterable[str] = TABLE_LAWS) -> list[CheckReport]:
    """Run the laws that need only a Betti table."""
    laws = list(laws)
    unknown = set(laws) - set(TABLE_LAWS)
    if unknown:
        raise ValueError(f"not table-only laws: {sorted(unknown)}")
    sv = max_shifts(table)
    runners = {
        "taylor_bounds": lambda: check_taylor_bounds(sv),
        "corner_vanishing": lambda: check_corner_vanishing(table),
        "strand_contiguity": lambda: check_strand_contiguity(table),
        "subadditivity": lambda: check_subadditivity(sv),
        "b4_subadditivity": lambda: check_b4_subadditivity(sv),
        "halfshift_bound": lambda: check_halfshift_bound(sv),
        "hypothesis_subadditivity": lambda: check_hypothesis_subadditivity(sv),
        "pd9": lambda: check_pd9(sv),
    }
    reports = []
    for law in laws:
        report = runners[law]()
        report.p = table.p
        reports.append(report)
    return reports


def check_all(
    g: Graph,
    fields: Iterable[int] = (2,),
    laws: Iterable[str] | None = None,
    r_max: int | None = None,
    mv_samples: int = 32,
    tables: dict[int, BettiTable] | None = None,
    budget_s: float | None = None,
) -> list[CheckReport]:
    """Every selected law on ``g``, once per field.

    ``tables`` may supply precomputed tables keyed by characteristic.
    """
    laws = list(ALL_LAWS if laws is None else laws)
    unknown = set(laws) - set(ALL_LAWS)
    if unknown:
        raise ValueError(f"unknown laws: {sorted(unknown)}")
    g6 = to_graph6(g)
    reports = []
    for p in fields:
        p = check_field(p)
        table = (tables or {}).get(p) or betti_table(g, p, budget_s=budget_s)
        reports.extend(check_table(table, [x for x in laws if x in TABLE_LAWS]))
        if "matching_degree" in laws:
            reports.append(check_matching_degree_lemma(g, table, r_max=r_max))
        if "mayer_vietoris" in laws:
            reports.append(check_mayer_vietoris_family(g, p, mv_samples))
        for r in reports:
            if r.p is None:
                r.p = p
    for r in reports:
        r.graph6 = g6
    return reports


def recheck(report: CheckReport | dict) -> bool:
    """True iff the violation record, on its own, demonstrates a failure."""
    rec = report.to_dict() if isinstance(report, CheckReport) else report
    v = rec.get("violation")
    if not v:
        return False
    law = rec["law"]
    if law in ("subadditivity", "b4_subadditivity", "pd9", "hypothesis_subadditivity"):
        t = v["t"]
        a, b = v["a"], v["b"]
        ok_fields = t[a] == v["t_a"] and t[b] == v["t_b"] and t[a + b] == v["t_ab"]
        if law == "b4_subadditivity" and not 1 <= b <= 4:
            return False
        if law == "hypothesis_subadditivity" and t[b] < ceil_three_halves(b):
            return False
        return ok_fields and t[a + b] > t[a] + t[b]
    if law == "halfshift_bound":
        t, a, b = v["t"], v["a"], v["b"]
        return a >= 2 and t[a] < 2 * a and t[a + b] > t[a] + ceil_three_halves(b)
    if law == "taylor_bounds":
        i, ti = v["i"], v["t_i"]
        return ti != 0 if i == 0 else not i < ti <= 2 * i
    if law == "corner_vanishing":
        return v["beta_i_ij"] == 0 and v["beta_i_ij1"] == 0 and v["beta_next"] != 0
    if law == "strand_contiguity":
        idx = set(v["strand"])
        return v["gap"] not in idx and min(idx) < v["gap"] < max(idx)
    if law == "matching_degree":
        g = parse_graph6(v["graph6"])
        m = [tuple(e) for e in v["matching"]]
        w = matching_vertices(m)
        is_matching = all(g.has_edge(x, y) for x, y in m) and len(members(w)) == 2 * len(m)
        induced = induced_subgraph(g, w)
        return (
            is_matching
            and len(m) > v["a"]
            and v["t_a"] < 2 * v["a"]
            and all(induced.degree(u) < 2 for u in range(induced.n))
        )
    if law == "mayer_vietoris":
        g = parse_graph6(v["graph6"])
        return _mv_violation(g, v["w"], v["v"], v["xs"], v["p"]) is not None
    raise ValueError(f"unknown law {law!r}")
