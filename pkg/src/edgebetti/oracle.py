"""Slow reference implementations used to cross-check the fast paths.

Nothing here shares code with the homology kernel: faces come from
``itertools.combinations``, boundary matrices are nested lists with explicit
signs, and ranks use textbook Gaussian elimination mod p. No cone pruning.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, induced_subgraph


def naive_rank(matrix: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((k for k in range(r, rows) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for k in range(rows):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [(x - f * y) % p for x, y in zip(m[k], m[r])]
        r += 1
        if r == rows:
            break
    return r


def naive_faces(g: Graph) -> list[list[tuple[int, ...]]]:
    """Independent sets of ``g`` by size, as sorted vertex tuples."""
    edges = set(g.edges())
    levels = []
    for k in range(g.n + 1):
        level = [c for c in combinations(range(g.n), k) if not any(pair in edges for pair in combinations(c, 2))]
        if not level:
            break
        levels.append(level)
    return levels


def naive_boundary(upper: list[tuple[int, ...]], lower: list[tuple[int, ...]]) -> list[list[int]]:
    index = {f: r for r, f in enumerate(lower)}
    m = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        for t in range(len(face)):
            m[index[face[:t] + face[t + 1 :]]][c] = (-1) ** t
    return m


def naive_reduced_betti(g: Graph, p: int) -> list[int]:
    """``[b_-1, b_0, ...]`` for ``Ind(g)``."""
    levels = naive_faces(g)
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        ranks[k] = naive_rank(naive_boundary(levels[k], levels[k - 1]), p)
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels))]


def naive_betti_entries(g: Graph, p: int) -> dict[tuple[int, int], int]:
    """Hochster sum over every subset, including cones and the empty set."""
    out: dict[tuple[int, int], int] = {}
    for size in range(g.n + 1):
        for verts in combinations(range(g.n), size):
            w = sum(1 << v for v in verts)
            for k, b in enumerate(naive_reduced_betti(induced_subgraph(g, w), p)):
                if b:
                    key = (size - k, size)
                    out[key] = out.get(key, 0) + b
    return out


def naive_euler(g: Graph) -> int:
    return sum((-1) ** (k + 1) * len(level) for k, level in enumerate(naive_faces(g)))
