"""Seeded random instance generators used by tests and the CLI.

All randomness flows through an explicit random.Random so runs are
reproducible from a single seed.
"""

from __future__ import annotations

import random

from .coloring import JoinEdge, JoinTree
from .decomposition import Decomposition
from .graph import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Random graph forced connected by a random recursive spanning tree."""
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_tree_edges(rng: random.Random, k: int) -> tuple[tuple[int, int], ...]:
    """Random recursive tree on k nodes."""
    return tuple((rng.randrange(v), v) for v in range(1, k))


def random_decomposition(
    rng: random.Random, g: Graph, num_nodes: int | None = None
) -> Decomposition:
    k = num_nodes if num_nodes is not None else rng.randint(1, max(1, min(6, g.n)))
    edges = random_tree_edges(rng, k)
    tau = tuple(rng.randrange(k) for _ in range(g.n))
    return Decomposition(k, edges, tau)


def random_cubic_decomposition(rng: random.Random, g: Graph) -> Decomposition:
    """Random leaf-labeled cubic tree with the vertices on its leaves.

    Built by inserting each leaf into a uniformly chosen existing edge; a
    valid rank-decomposition shape for any graph with n >= 2.
    """
    n = g.n
    if n < 2:
        return Decomposition(1, (), tuple(0 for _ in range(n)))
    edges = [(0, 1)]
    next_node = n
    for m in range(2, n):
        a, b = edges.pop(rng.randrange(len(edges)))
        t = next_node
        next_node += 1
        edges += [(a, t), (t, b), (t, m)]
    return Decomposition(next_node, tuple(edges), tuple(range(n)))


def random_join_tree(
    rng: random.Random, num_pieces: int, extra: int = 3, p: float = 0.5
) -> JoinTree:
    """Random join tree; every piece gets enough vertices for its markers."""
    tree = random_tree_edges(rng, num_pieces)
    degree = [0] * num_pieces
    for a, b in tree:
        degree[a] += 1
        degree[b] += 1
    pieces = []
    marker_pools: list[list[int]] = []
    for i in range(num_pieces):
        size = degree[i] + rng.randint(1, extra)
        pieces.append(random_connected_graph(rng, size, p))
        pool = list(range(size))
        rng.shuffle(pool)
        marker_pools.append(pool)
    joins = []
    for a, b in tree:
        joins.append(
            JoinEdge(a, b, marker_pools[a].pop(), marker_pools[b].pop())
        )
    return JoinTree(tuple(pieces), tuple(joins))
