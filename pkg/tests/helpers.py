"""Independent brute-force oracles used only by the test suite.

Deliberately naive implementations: they share no code path with the
package internals they check.
"""

from __future__ import annotations

import itertools
import random

from rankchi import Graph


def naive_gf2_rank(matrix: list[list[int]]) -> int:
    """Textbook Gaussian elimination over integers mod 2, entry by entry."""
    m = [row[:] for row in matrix]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, n_rows):
            if m[r][col] % 2 == 1:
                pivot = r
                break
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        for r in range(n_rows):
            if r != pivot_row and m[r][col] % 2 == 1:
                m[r] = [(a + b) % 2 for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def matrix_of_cut(g: Graph, w_side: list[int]) -> list[list[int]]:
    other = [v for v in range(g.n) if v not in w_side]
    return [[1 if g.has_edge(u, v) else 0 for v in other] for u in w_side]


def naive_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper labeling, by exhaustive enumeration."""
    if g.n == 0:
        return 0
    edges = list(g.edges())
    if not edges:
        return 1
    for k in range(1, g.n + 1):
        for labeling in itertools.product(range(k), repeat=g.n):
            if all(labeling[u] != labeling[v] for u, v in edges):
                return k
    raise AssertionError("unreachable: n colors always suffice")


def naive_clique_number(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return best


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_vertex_subset(rng: random.Random, n: int) -> int:
    return rng.randrange(1 << n) if n else 0
