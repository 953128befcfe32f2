"""Reduced homology of independence complexes over prime fields.

Faces of ``Ind(G)`` are independent vertex sets, kept as bitmasks. Homology
dimensions come from rank-nullity on the boundary maps; over GF(2) the rank is
an xor basis on packed integer columns, over odd primes a numpy elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, members

MAX_PRIME = 46337


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def check_field(p: int) -> int:
    """Validate a field characteristic and return it."""
    if not isinstance(p, (int, np.integer)) or not 2 <= p <= MAX_PRIME or not is_prime(int(p)):
        raise ValueError(f"field characteristic must be a prime in 2..{MAX_PRIME}, got {p!r}")
    return int(p)


@dataclass(frozen=True)
class FaceBasis:
    k: int
    faces: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the boundary map from ``k``-vertex faces to ``(k-1)``-vertex faces."""

    k: int
    p: int
    entries: np.ndarray  # shape (rows, cols), values in 0..p-1

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def bit_rows(self) -> list[int]:
        """Rows packed as integers (bit ``c`` = column ``c``); only meaningful for p=2."""
        return [sum(1 << c for c in np.flatnonzero(row)) for row in self.entries % 2]


@dataclass(frozen=True)
class ReducedBettiVector:
    """``values[d + 1]`` is the reduced Betti number in homology degree ``d``."""

    values: tuple[int, ...]
    p: int

    def __getitem__(self, d: int) -> int:
        k = d + 1
        return self.values[k] if 0 <= k < len(self.values) else 0

    @property
    def top_degree(self) -> int:
        return len(self.values) - 2

    def nonzero(self) -> dict[int, int]:
        return {k - 1: b for k, b in enumerate(self.values) if b}

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k + 1) * b for k, b in enumerate(self.values))


def independent_faces(g: Graph, w: int | None = None) -> list[list[int]]:
    """All independent subsets of ``w`` grouped by size, each group in lex order.

    ``result[k]`` lists the ``k``-element faces; ``result[0] == [0]``.
    """
    if w is None:
        w = g.full_set
    adj = g.adj
    levels = [[0]]
    # (face, vertices that may still be appended: larger, in w, non-adjacent)
    frontier = [(0, w)]
    while frontier:
        nxt = []
        for face, cand in frontier:
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                c ^= low
                above = cand & ~((low << 1) - 1)
                nxt.append((face | low, above & ~adj[v]))
        if not nxt:
            break
        levels.append([f for f, _ in nxt])
        frontier = nxt
    return levels


def independent_sets_of_size(g: Graph, k: int) -> FaceBasis:
    if not 0 <= k <= g.n:
        raise ValueError(f"face size {k} outside 0..{g.n}")
    levels = independent_faces(g)
    return FaceBasis(k, tuple(levels[k]) if k < len(levels) else ())


def face_counts(g: Graph, w: int | None = None) -> tuple[int, ...]:
    return tuple(len(level) for level in independent_faces(g, w))


def reduced_euler_from_counts(counts) -> int:
    """Reduced Euler characteristic: sum over faces of ``(-1)^(|F| - 1)``, empty face included."""
    return sum((-1) ** (k + 1) * f for k, f in enumerate(counts))


def _boundary_dense(upper: list[int], lower: list[int], p: int) -> np.ndarray:
    index = {f: r for r, f in enumerate(lower)}
    m = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for c, face in enumerate(upper):
        for t, v in enumerate(members(face)):
            m[index[face & ~(1 << v)], c] = 1 if t % 2 == 0 else p - 1
    return m


def _boundary_columns_gf2(upper: list[int], lower: list[int]) -> list[int]:
    index = {f: r for r, f in enumerate(lower)}
    cols = []
    for face in upper:
        col = 0
        f = face
        while f:
            low = f & -f
            f ^= low
            col |= 1 << index[face ^ low]
        cols.append(col)
    return cols


def boundary_matrix(g: Graph, k: int, p: int = 2) -> BoundaryMatrix:
    """Boundary map on ``Ind(g)`` from ``k``-vertex faces to ``(k-1)``-vertex faces.

    The column of face ``{v_0 < ... < v_{k-1}}`` has ``(-1)^t`` at the face
    with ``v_t`` removed. ``k = 1`` is the augmentation to the empty face.
    """
    p = check_field(p)
    if k < 1:
        raise ValueError("k must be >= 1")
    levels = independent_faces(g)
    upper = levels[k] if k < len(levels) else []
    lower = levels[k - 1] if k - 1 < len(levels) else []
    return BoundaryMatrix(k, p, _boundary_dense(upper, lower, p))


def rank_gf2(vectors) -> int:
    """Rank over GF(2) of integers read as bit vectors."""
    basis: dict[int, int] = {}
    for x in vectors:
        while x:
            top = x.bit_length()
            pivot = basis.get(top)
            if pivot is None:
                basis[top] = x
                break
            x ^= pivot
    return len(basis)


def _rank_dense_mod_p(m: np.ndarray, p: int) -> int:
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(m[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = m[rank] * pow(int(m[rank, c]), -1, p) % p
        below = rank + 1 + np.flatnonzero(m[rank + 1 :, c])
        if below.size:
            m[below] = (m[below] - np.outer(m[below, c], m[rank])) % p
        rank += 1
    return rank


def rank_mod_p(m, p: int | None = None) -> int:
    """Rank over GF(p) of a ``BoundaryMatrix`` or any integer 2-d array."""
    if isinstance(m, BoundaryMatrix):
        p = m.p if p is None else p
        m = m.entries
    p = check_field(2 if p is None else p)
    m = np.asarray(m)
    if m.size == 0:
        return 0
    if p == 2:
        packed = [int.from_bytes(np.packbits(row % 2).tobytes(), "big") for row in m]
        return rank_gf2(packed)
    return _rank_dense_mod_p(m, p)


def betti_from_levels(levels: list[list[int]], p: int) -> tuple[int, ...]:
    """Reduced Betti numbers ``(b_-1, b_0, ..., b_top)`` from grouped faces."""
    top = len(levels)  # faces have sizes 0..top-1
    ranks = [0] * (top + 1)  # ranks[k] = rank of boundary from size k to size k-1
    for k in range(1, top):
        if p == 2:
            ranks[k] = rank_gf2(_boundary_columns_gf2(levels[k], levels[k - 1]))
        else:
            ranks[k] = _rank_dense_mod_p(_boundary_dense(levels[k], levels[k - 1], p), p)
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top))


def reduced_betti_vector(g: Graph, p: int = 2, w: int | None = None) -> ReducedBettiVector:
    """Reduced Betti numbers of ``Ind(g[w])`` (``w`` defaults to all vertices).

    On zero vertices the complex is ``{empty face}`` and ``b_-1 = 1``.
    """
    p = check_field(p)
    return ReducedBettiVector(betti_from_levels(independent_faces(g, w), p), p)


def is_cone(g: Graph, w: int | None = None) -> bool:
    """True iff ``g[w]`` has an isolated vertex, making ``Ind(g[w])`` a cone."""
    if w is None:
        w = g.full_set
    return any(not (g.adj[v] & w) for v in members(w))
