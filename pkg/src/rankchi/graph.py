"""Undirected simple graphs on dense integer ids with int-bitset adjacency.

Vertex sets are plain Python ints used as bitsets; bit v set means vertex v
is a member.  Graphs are immutable and hashable, so they can be memoized and
shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError


def bitset(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into an int bitset."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; adj[v] is the neighbor bitset of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InputError("adjacency tuple length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2


def connected_components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on vertex set s, with the old->new id remapping."""
    if s & ~g.vertex_mask:
        raise InputError("vertex set contains ids outside the graph")
    old = list(iter_bits(s))
    remap = {u: i for i, u in enumerate(old)}
    adj = []
    for u in old:
        row = 0
        for w in iter_bits(g.adj[u] & s):
            row |= 1 << remap[w]
        adj.append(row)
    return Graph(len(old), tuple(adj)), remap


def twin_classes(g: Graph) -> list[int]:
    """Partition of V(g) into classes of equal open neighborhoods.

    Classes are returned as bitsets ordered by their smallest member.
    """
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | (1 << v)
    return sorted(groups.values(), key=lambda m: m & -m)


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the edge set inside the neighborhood of v."""
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range")
    nv = g.adj[v]
    adj = list(g.adj)
    for u in iter_bits(nv):
        # flip u's adjacency to the other neighbors of v
        adj[u] ^= nv & ~(1 << u)
    return Graph(g.n, tuple(adj))


def one_join(
    g1: Graph, v1: int, g2: Graph, v2: int
) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Join g1 and g2 at marker vertices v1, v2.

    Both markers are deleted; every neighbor of v1 becomes adjacent to every
    neighbor of v2.  Returns the joined graph plus the id remappings of the
    surviving vertices of g1 and g2.
    """
    if not 0 <= v1 < g1.n:
        raise InputError(f"vertex {v1} out of range in first graph")
    if not 0 <= v2 < g2.n:
        raise InputError(f"vertex {v2} out of range in second graph")
    keep1 = [u for u in range(g1.n) if u != v1]
    keep2 = [u for u in range(g2.n) if u != v2]
    map1 = {u: i for i, u in enumerate(keep1)}
    map2 = {u: len(keep1) + i for i, u in enumerate(keep2)}
    n = len(keep1) + len(keep2)
    adj = [0] * n
    for u in keep1:
        for w in iter_bits(g1.adj[u] & ~(1 << v1)):
            adj[map1[u]] |= 1 << map1[w]
    for u in keep2:
        for w in iter_bits(g2.adj[u] & ~(1 << v2)):
            adj[map2[u]] |= 1 << map2[w]
    for u in iter_bits(g1.adj[v1]):
        for w in iter_bits(g2.adj[v2]):
            adj[map1[u]] |= 1 << map2[w]
            adj[map2[w]] |= 1 << map1[u]
    return Graph(n, tuple(adj)), map1, map2


def blow_up(g: Graph, v: int, t: int) -> tuple[Graph, tuple[int, ...]]:
    """Replace v by an independent set of t vertices sharing v's neighborhood.

    Vertex v keeps its id as the first member; the t-1 extra copies get the
    new ids n, n+1, ....  All other vertex ids are unchanged.
    """
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range")
    if t < 1:
        raise InputError("blow-up size must be at least 1 (use induced_subgraph to delete)")
    n = g.n + t - 1
    adj = list(g.adj) + [g.adj[v]] * (t - 1)
    for u in iter_bits(g.adj[v]):
        for c in range(g.n, n):
            adj[u] |= 1 << c
    members = (v,) + tuple(range(g.n, n))
    return Graph(n, tuple(adj)), members


# --- named catalog (fixed vertex numbering so tests are reproducible) ---


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(rim: int) -> Graph:
    """Cycle on vertices 0..rim-1 plus a dominating hub with id rim."""
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph.from_edges(rim + 1, edges)


def cube() -> Graph:
    """3-dimensional hypercube: vertices are {0,1}^3, edges at Hamming distance 1."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return Graph.from_edges(8, edges)


def cube_minus() -> Graph:
    """The cube with vertex 7 removed."""
    g, _ = induced_subgraph(cube(), bitset(range(7)))
    return g


def named_graph(name: str) -> Graph:
    """Resolve a catalog name: w5, w7, cube, cube-, cycle:N, path:N, complete:N."""
    key = name.lower()
    if key == "w5":
        return wheel(5)
    if key == "w7":
        return wheel(7)
    if key == "cube":
        return cube()
    if key == "cube-":
        return cube_minus()
    if ":" in key:
        kind, _, arg = key.partition(":")
        try:
            m = int(arg)
        except ValueError as exc:
            raise InputError(f"bad size in graph name {name!r}") from exc
        if kind == "cycle":
            return cycle(m)
        if kind == "path":
            return path_graph(m)
        if kind == "complete":
            return complete(m)
    raise InputError(f"unknown graph name {name!r}")
