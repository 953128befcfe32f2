"""Simple graphs on at most 32 vertices, stored as bitmask adjacency rows.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is a
member. Everything here is immutable and cheap to hash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 32
MAX_CANONICAL_N = 8
MAX_ENUMERATE_N = 6


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)


def popcount(x: int) -> int:
    return bin(x).count("1")


def members(w: int) -> list[int]:
    """Vertices of the bitmask ``w`` in increasing order."""
    out = []
    while w:
        low = w & -w
        out.append(low.bit_length() - 1)
        w ^= low
    return out


def vertex_set(vertices: Iterable[int]) -> int:
    w = 0
    for v in vertices:
        w |= 1 << v
    return w


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = self.full_set
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond n={self.n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_set(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for v in range(self.n) for u in members(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int, within: int | None = None) -> int:
        row = self.adj[v]
        return popcount(row if within is None else row & within)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_independent(self, w: int) -> bool:
        return all(not (self.adj[v] & w) for v in members(w))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, itertools.chain(g.edges(), shifted))


# --- graph6 -----------------------------------------------------------------


def _upper_triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("short-form graph6 needs n <= 62")
    bits = [1 if g.has_edge(i, j) else 0 for i, j in _upper_triangle_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(63 + value))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line (optionally with a ``>>graph6<<`` header)."""
    line = text.strip()
    base = 0
    if line.startswith(">>graph6<<"):
        line = line[10:]
        base = 10
    if not line:
        raise FormatError("empty graph6 string", base)
    n = ord(line[0]) - 63
    if n < 0 or n > 62:
        raise FormatError(f"bad header byte {line[0]!r}", base)
    if n > MAX_VERTICES:
        raise FormatError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit", base)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = line[1:]
    if len(body) < nbytes:
        raise FormatError("truncated bit field", base + 1 + len(body))
    if len(body) > nbytes:
        raise FormatError("trailing garbage", base + 1 + nbytes)
    bits = []
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise FormatError(f"bad data byte {ch!r}", base + 1 + k)
        bits.extend(value >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits", base + len(body))
    edges = [pair for pair, b in zip(_upper_triangle_pairs(n), bits) if b]
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from graph6 lines; blank lines and ``>`` comments are skipped."""
    for line in lines:
        line = line.strip()
        if not line or (line.startswith(">") and not line.startswith(">>graph6<<")):
            continue
        yield parse_graph6(line)


# --- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by whitespace-separated vertex pairs ``u v``.

    Lines starting with ``#`` are comments. Duplicate edges are collapsed.
    """
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens:
        raise FormatError("empty edge list")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"non-integer token: {exc}") from None
    n, rest = values[0], values[1:]
    if not 0 <= n <= MAX_VERTICES:
        raise FormatError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    if len(rest) % 2:
        raise FormatError("odd number of endpoint tokens")
    pairs = list(zip(rest[::2], rest[1::2]))
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range in edge {u} {v} (n={n})")
        if u == v:
            raise FormatError(f"loop at vertex {u}")
    return Graph.from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# --- structural operations ------------------------------------------------------


def induced_subgraph(g: Graph, w: int) -> Graph:
    """``G[w]`` relabelled by increasing original index."""
    verts = members(w & g.full_set)
    index = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in members(g.adj[v] & w):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(verts), tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_set
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def enumerate_matchings(g: Graph, r: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every set of ``r`` pairwise disjoint edges, once, as sorted edge tuples."""
    if r < 1:
        raise ValueError("matching size must be >= 1")
    edges = g.edges()

    def extend(start: int, used: int, chosen: list) -> Iterator[tuple]:
        if len(chosen) == r:
            yield tuple(chosen)
            return
        for k in range(start, len(edges)):
            u, v = edges[k]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append(edges[k])
            yield from extend(k + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    yield from extend(0, 0, [])


def matching_vertices(matching: Iterable[tuple[int, int]]) -> int:
    return vertex_set(v for edge in matching for v in edge)


def is_induced_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> bool:
    w = matching_vertices(matching)
    return all(g.degree(v, within=w) == 1 for v in members(w))


def count_induced_matchings(g: Graph, a: int) -> int:
    """Number of size-``a`` matchings whose endpoints induce exactly those edges."""
    return sum(1 for m in enumerate_matchings(g, a) if is_induced_matching(g, m))


# --- canonical forms and enumeration ----------------------------------------------


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


@lru_cache(maxsize=None)
def _triangle_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = list(_upper_triangle_pairs(n))
    rows = np.array([i for i, _ in pairs], dtype=np.intp)
    cols = np.array([j for _, j in pairs], dtype=np.intp)
    return rows, cols


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def canonical_form(g: Graph) -> bytes:
    """Lexicographically least graph6-order adjacency bit string over all relabellings.

    Brute force over all ``n!`` permutations, so limited to ``n <= 8``.
    """
    if g.n > MAX_CANONICAL_N:
        raise ValueError(f"brute-force canonical form supports n <= {MAX_CANONICAL_N}")
    if g.n < 2:
        return bytes([g.n])
    perms = _permutation_table(g.n)
    rows, cols = _triangle_index(g.n)
    a = adjacency_matrix(g).astype(np.int64)
    # bits[p, k] = edge between perm[p][rows[k]] and perm[p][cols[k]]
    bits = a[perms[:, rows], perms[:, cols]]
    weights = np.int64(1) << np.arange(len(rows) - 1, -1, -1, dtype=np.int64)
    best = int((bits @ weights).min())
    return bytes([g.n]) + best.to_bytes((len(rows) + 7) // 8, "big")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    pairs = list(_upper_triangle_pairs(n))
    seen: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (p for k, p in enumerate(pairs) if mask >> k & 1))
        seen.setdefault(canonical_form(g), g)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Exhaustive over the ``2^(n(n-1)/2)`` labelled graphs, so ``n <= 6``.
    Output order is deterministic (sorted by canonical form).
    """
    if not 0 <= n <= MAX_ENUMERATE_N:
        raise ValueError(f"built-in enumeration supports 0 <= n <= {MAX_ENUMERATE_N}; use a graph6 corpus")
    return iter(_graph_classes(n))


def random_graph(rng, n: int, density: float = 0.5) -> Graph:
    """Erdos-Renyi style graph; ``rng`` is a ``random.Random``-like object."""
    return Graph.from_edges(n, (e for e in itertools.combinations(range(n), 2) if rng.random() < density))

