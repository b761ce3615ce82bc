"""Brute-force ground truth: cliques, chromatic number, vertex-minor search.

Everything here is exact and independent of the constructive coloring code,
so it can verify the guarantees of the latter at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import LIMITS
from .errors import InputError, ResourceError
from .graph import Graph, induced_subgraph, iter_bits, local_complement


@dataclass(frozen=True)
class Coloring:
    """Total map from vertex ids to positive integer colors."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(c, int) or c < 1 for c in self.colors):
            raise InputError("colors must be positive integers")

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)


def maximum_cliques(g: Graph, limit: int | None = None) -> list[int]:
    """All vertex bitsets inducing cliques of size omega(g) (Bron-Kerbosch)."""
    cap = limit if limit is not None else LIMITS.clique_n
    if g.n > cap:
        raise ResourceError(f"clique enumeration limited to n <= {cap} (got {g.n})")
    if g.n == 0:
        return []
    best_size = 0
    best: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        nonlocal best_size, best
        if not p and not x:
            s = r.bit_count()
            if s > best_size:
                best_size = s
                best = [r]
            elif s == best_size:
                best.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (g.adj[u] & p).bit_count())
        for v in iter_bits(p & ~g.adj[pivot]):
            bk(r | (1 << v), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.vertex_mask, 0)
    return best


def clique_number(g: Graph, limit: int | None = None) -> int:
    if g.n == 0:
        return 0
    return maximum_cliques(g, limit)[0].bit_count()


def greedy_coloring(g: Graph) -> Coloring:
    """DSATUR-style greedy proper coloring (used as an upper bound and fallback)."""
    colors = [0] * g.n
    for _ in range(g.n):
        pick, key = -1, (-1, -1)
        for v in range(g.n):
            if colors[v]:
                continue
            sat = len({colors[u] for u in iter_bits(g.adj[v]) if colors[u]})
            cand = (sat, g.degree(v))
            if cand > key:
                key, pick = cand, v
        used = {colors[u] for u in iter_bits(g.adj[pick])}
        c = 1
        while c in used:
            c += 1
        colors[pick] = c
    return Coloring(tuple(colors))


def _try_k_coloring(g: Graph, k: int) -> list[int] | None:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colors = [0] * g.n

    def rec(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = 0
        for u in iter_bits(g.adj[v]):
            if colors[u]:
                forbidden |= 1 << colors[u]
        for c in range(1, min(k, used + 1) + 1):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def chromatic_number(g: Graph, limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness, by branch and bound.

    Lower bound from the clique number, upper bound from DSATUR, then a
    backtracking search with symmetry breaking on the color indices.
    """
    cap = limit if limit is not None else LIMITS.chromatic_n
    if g.n > cap:
        raise ResourceError(f"chromatic number limited to n <= {cap} (got {g.n})")
    if g.n == 0:
        return 0, Coloring(())
    lb = clique_number(g)
    ub_coloring = greedy_coloring(g)
    ub = ub_coloring.palette_size
    for k in range(lb, ub):
        found = _try_k_coloring(g, k)
        if found is not None:
            return k, Coloring(tuple(found))
    return ub, ub_coloring


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge is monochromatic; the coloring must be total."""
    if len(c.colors) != g.n:
        raise InputError("coloring is not total on the vertex set")
    return all(c.colors[u] != c.colors[v] for u, v in g.edges())


def no_max_clique_monochromatic(g: Graph, c: Coloring, limit: int | None = None) -> bool:
    """True iff every maximum clique sees at least two colors.

    For omega(g) <= 1 this is vacuously true by convention: the guarantee
    only matters when maximum cliques contain edges.
    """
    if len(c.colors) != g.n:
        raise InputError("coloring is not total on the vertex set")
    cliques = maximum_cliques(g, limit)
    if not cliques or cliques[0].bit_count() <= 1:
        return True
    for clique in cliques:
        if len({c.colors[v] for v in iter_bits(clique)}) < 2:
            return False
    return True


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Canonical relabeling certificate: two graphs are isomorphic iff equal.

    Branch-and-bound over vertex orderings maximizing, level by level, the
    bitset of each vertex's adjacency to the already-placed prefix.
    """
    n = g.n
    if n == 0:
        return ()
    best: tuple[int, ...] | None = None
    placed: list[int] = []
    code: list[int] = []

    def rec(placed_mask: int) -> None:
        nonlocal best
        i = len(placed)
        if i == n:
            t = tuple(code)
            if best is None or t > best:
                best = t
            return
        candidates = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            c = 0
            for j, u in enumerate(placed):
                if g.adj[v] >> u & 1:
                    c |= 1 << j
            candidates.append((c, v))
        candidates.sort(reverse=True)
        for c, v in candidates:
            if best is not None and len(best) > i:
                prefix = best[:i] if i else ()
                if tuple(code) == prefix and c < best[i]:
                    break  # all remaining candidates are smaller
            placed.append(v)
            code.append(c)
            rec(placed_mask | (1 << v))
            placed.pop()
            code.pop()

    rec(0)
    assert best is not None
    return best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)


def has_vertex_minor(g: Graph, h: Graph, limit: int | None = None) -> bool:
    """Whether some sequence of local complementations and deletions turns
    g into a graph isomorphic to h.

    Memoized search over canonical forms; local complementations are explored
    at every size down to |V(h)| (equal-size containment means local
    equivalence, so the orbit must still be walked there).
    """
    cap = limit if limit is not None else LIMITS.vertex_minor_n
    if g.n > cap:
        raise ResourceError(f"vertex-minor search limited to n <= {cap} (got {g.n})")
    if h.n > g.n:
        return False
    target = canonical_form(h)
    seen: set[tuple[int, ...]] = set()
    stack = [g]
    while stack:
        cur = stack.pop()
        key = canonical_form(cur)
        if key in seen:
            continue
        seen.add(key)
        if cur.n == h.n and key == target:
            return True
        for v in range(cur.n):
            stack.append(local_complement(cur, v))
            if cur.n > h.n:
                sub, _ = induced_subgraph(cur, cur.vertex_mask & ~(1 << v))
                stack.append(sub)
    return False
