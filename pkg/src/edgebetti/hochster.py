"""Graded Betti tables of edge ideals via Hochster's formula.

For every vertex subset ``W`` the reduced homology of ``Ind(G[W])`` in degree
``d`` contributes to ``beta_{|W|-d-1, |W|}(S/I(G))``. Subsets whose induced
graph has an isolated vertex give a cone and are skipped.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, members, popcount
from .homology import (
    ReducedBettiVector,
    betti_from_levels,
    check_field,
    independent_faces,
    is_cone,
    reduced_euler_from_counts,
)

MAX_HOCHSTER_N = 22
SCHEMA_VERSION = 1


class GraphTooLarge(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class EulerMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers ``beta_{i,j}(S/I(G))`` keyed by ``(i, j)``."""

    n: int
    p: int
    entries: dict = field(default_factory=dict)

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (ii, j), b in sorted(self.entries.items()) if ii == i}

    def shifts(self) -> "ShiftVector":
        return max_shifts(self)

    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def to_text(self) -> str:
        lines = [f"n={self.n} p={self.p} pd={self.pd}"]
        lines += [f"{i} {j} {b}" for (i, j), b in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "n": self.n,
                "p": self.p,
                "pd": self.pd,
                "entries": [[i, j, b] for (i, j), b in sorted(self.entries.items())],
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        entries = {(int(i), int(j)): int(b) for i, j, b in data["entries"] if b}
        table = cls(int(data["n"]), int(data["p"]), entries)
        if "pd" in data and int(data["pd"]) != table.pd:
            raise ValueError(f"declared pd {data['pd']} disagrees with entries (pd={table.pd})")
        return table

    def diagram(self) -> str:
        """Betti diagram: row ``s`` lists ``beta_{i,i+s}`` across columns ``i``."""
        pd = self.pd
        strands = sorted({j - i for i, j in self.entries}) or [0]
        width = max([len(str(b)) for b in self.entries.values()] + [len(str(pd)), 1]) + 1
        out = ["   " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        for s in range(strands[0], strands[-1] + 1):
            cells = "".join(f"{self[i, i + s] or '.':>{width}}" for i in range(pd + 1))
            out.append(f"{s:>2}:" + cells)
        return "\n".join(out)


@dataclass(frozen=True)
class ShiftVector:
    """Maximal shifts ``t_0, ..., t_pd``."""

    t: tuple[int, ...]

    @property
    def pd(self) -> int:
        return len(self.t) - 1

    def __getitem__(self, i: int) -> int:
        if not 0 <= i <= self.pd:
            raise IndexError(f"t_{i} undefined beyond pd={self.pd}")
        return self.t[i]

    def __iter__(self):
        return iter(self.t)

    def __len__(self) -> int:
        return len(self.t)

    def __str__(self) -> str:
        return " ".join(map(str, self.t))


@dataclass(frozen=True)
class Witness:
    """A subset ``w`` with ``|w| = j`` whose independence complex carries ``beta_{i,j}``."""

    i: int
    j: int
    w: int
    d: int
    multiplicity: int

    @property
    def vertices(self) -> list[int]:
        return members(self.w)


def _contributions(
    g: Graph,
    p: int,
    lo: int,
    hi: int,
    prune: bool,
    deadline: float | None,
    on_complex: Callable | None,
    euler_check: bool,
) -> Counter:
    out: Counter = Counter()
    for w in range(max(lo, 1), hi):
        if deadline is not None and not w & 0xFF and time.monotonic() > deadline:
            raise BudgetExceeded(f"time budget exhausted at subset {w} of {1 << g.n}")
        if prune and is_cone(g, w):
            continue
        levels = independent_faces(g, w)
        betti = betti_from_levels(levels, p)
        if euler_check:
            chi = reduced_euler_from_counts(len(level) for level in levels)
            alt = sum((-1) ** (k + 1) * b for k, b in enumerate(betti))
            if chi != alt:
                raise EulerMismatch(f"W={w:#x}: Euler {chi} != alternating Betti sum {alt}")
        if on_complex is not None:
            on_complex(w, ReducedBettiVector(betti, p), tuple(len(level) for level in levels))
        size = popcount(w)
        for k, b in enumerate(betti):
            if b:
                # homology degree d = k - 1 lands in row i = |W| - d - 1
                out[size - k, size] += b
    return out


def _chunk_job(args) -> Counter:
    g, p, lo, hi, prune, deadline, euler_check = args
    return _contributions(g, p, lo, hi, prune, deadline, None, euler_check)


def betti_table(
    g: Graph,
    p: int = 2,
    *,
    prune: bool = True,
    workers: int = 1,
    budget_s: float | None = None,
    euler_check: bool = False,
    on_complex: Callable | None = None,
) -> BettiTable:
    """Graded Betti table of ``S/I(g)`` over GF(p).

    ``workers > 1`` splits the subset range across processes; the result does
    not depend on the split. ``on_complex(w, betti_vector, face_counts)`` is
    called for every complex evaluated (single-process only).
    """
    p = check_field(p)
    if g.n > MAX_HOCHSTER_N:
        raise GraphTooLarge(f"n={g.n} exceeds the Hochster cap of {MAX_HOCHSTER_N}")
    deadline = None if budget_s is None else time.monotonic() + budget_s
    total = 1 << g.n
    if workers <= 1 or g.n < 2 or on_complex is not None:
        counts = _contributions(g, p, 0, total, prune, deadline, on_complex, euler_check)
    else:
        step = -(-total // (workers * 4))
        jobs = [(g, p, lo, min(lo + step, total), prune, deadline, euler_check) for lo in range(0, total, step)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_chunk_job, jobs):
                counts.update(part)
    entries = {(0, 0): 1}
    entries.update((key, counts[key]) for key in sorted(counts))
    return BettiTable(g.n, p, entries)


def max_shifts(table: BettiTable) -> ShiftVector:
    t = []
    for i in range(table.pd + 1):
        row = table.row(i)
        if not row:
            raise ValueError(f"row {i} of the table is empty below pd={table.pd}")
        t.append(max(row))
    return ShiftVector(tuple(t))


def witnesses(g: Graph, i: int, p: int = 2, table: BettiTable | None = None) -> list[Witness]:
    """Subsets ``W`` with ``|W| = t_i`` whose complex has homology in degree ``t_i - i - 1``."""
    table = betti_table(g, p) if table is None else table
    if not 1 <= i <= table.pd:
        raise ValueError(f"index {i} outside 1..pd={table.pd}")
    t_i = max(table.row(i))
    d = t_i - i - 1
    out = []
    for w in range(1 << g.n):
        if popcount(w) != t_i or is_cone(g, w):
            continue
        b = betti_from_levels(independent_faces(g, w), table.p)
        if d + 1 < len(b) and b[d + 1]:
            out.append(Witness(i, t_i, w, d, b[d + 1]))
    return out


def strand(table: BettiTable, offset: int) -> set[int]:
    """Homological indices ``i`` with ``beta_{i, i+offset} != 0``."""
    if offset < 1:
        raise ValueError("strand offset must be >= 1")
    return {i for i, j in table.entries if j - i == offset}
