"""Tree decompositions (tree + total vertex mapping), their cuts and pieces.

A decomposition is a tree T over dense node ids together with a total map tau
from graph vertices to tree nodes.  Every tree edge induces a cut of the
graph; the rank/diversity of the decomposition is the maximum over its edges.
Rank-decompositions (cubic trees with vertices bijectively on the leaves) and
exhaustive exact rank-width search live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .config import LIMITS
from .cuts import cut_diversity, cut_matrix, cut_rank, cut_rank_of
from .errors import InputError, ResourceError, StateError, ValidationError
from .graph import Graph, induced_subgraph, iter_bits


@dataclass(frozen=True)
class Decomposition:
    """Tree over num_nodes node ids plus tau: vertex index -> node id."""

    num_nodes: int
    tree_edges: tuple[tuple[int, int], ...]
    tau: tuple[int, ...]
    root: int | None = None

    def __post_init__(self) -> None:
        k = self.num_nodes
        if k < 1:
            raise InputError("decomposition needs at least one node")
        if len(self.tree_edges) != k - 1:
            raise InputError("tree must have exactly num_nodes - 1 edges")
        adj: list[list[int]] = [[] for _ in range(k)]
        for a, b in self.tree_edges:
            if not (0 <= a < k and 0 <= b < k) or a == b:
                raise InputError(f"bad tree edge ({a},{b})")
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * k
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        if count != k:
            raise InputError("tree edges do not form a connected tree")
        for v, node in enumerate(self.tau):
            if not 0 <= node < k:
                raise InputError(f"tau maps vertex {v} to a non-node")
        if self.root is not None:
            if not 0 <= self.root < k:
                raise InputError("root out of range")
            if len(adj[self.root]) > 1:
                raise InputError("root must be a leaf")
            if any(node == self.root for node in self.tau):
                raise InputError("root leaf must have an empty preimage")

    def node_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        for lst in adj:
            lst.sort()
        return adj


@dataclass(frozen=True)
class RankDecomposition:
    """A validated rank-decomposition together with its width."""

    decomposition: Decomposition
    width: int


def edge_cut(g: Graph, d: Decomposition, e: tuple[int, int]) -> tuple[int, int]:
    """Vertex bitsets of the two sides induced by tree edge e (a-side first)."""
    a, b = e
    if (a, b) not in d.tree_edges and (b, a) not in d.tree_edges:
        raise InputError(f"({a},{b}) is not a tree edge")
    adj = d.node_adjacency()
    side_nodes = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if x == a and y == b:
                continue  # the removed edge
            if y not in side_nodes:
                side_nodes.add(y)
                stack.append(y)
    side_a = 0
    for v, node in enumerate(d.tau):
        if node in side_nodes:
            side_a |= 1 << v
    return side_a, g.vertex_mask & ~side_a


def decomposition_rank(g: Graph, d: Decomposition) -> int:
    return max((cut_rank_of(g, edge_cut(g, d, e)[0]) for e in d.tree_edges), default=0)


def decomposition_diversity(g: Graph, d: Decomposition) -> int:
    best = 0
    for e in d.tree_edges:
        side, _ = edge_cut(g, d, e)
        best = max(best, cut_diversity(cut_matrix(g, side)))
    return best


def piece_graph(g: Graph, d: Decomposition, v: int) -> Graph:
    """Spanning subgraph keeping edges whose endpoint images straddle node v."""
    if not 0 <= v < d.num_nodes:
        raise InputError(f"node {v} out of range")
    adj_nodes = d.node_adjacency()
    comp = [-1] * d.num_nodes  # component index of T - v; v itself stays -1
    cid = 0
    for start in adj_nodes[v]:
        if comp[start] != -1:
            continue
        comp[start] = cid
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj_nodes[x]:
                if y != v and comp[y] == -1:
                    comp[y] = cid
                    stack.append(y)
        cid += 1
    adj = [0] * g.n
    for u, w in g.edges():
        cu, cw = comp[d.tau[u]], comp[d.tau[w]]
        if cu == -1 or cw == -1 or cu != cw:
            adj[u] |= 1 << w
            adj[w] |= 1 << u
    return Graph(g.n, tuple(adj))


def rooted_parents(d: Decomposition) -> tuple[list[int], list[int]]:
    """Parent and depth arrays of the rooted tree; requires a root."""
    if d.root is None:
        raise StateError("decomposition is not rooted")
    adj = d.node_adjacency()
    parent = [-1] * d.num_nodes
    depth = [0] * d.num_nodes
    order = [d.root]
    seen = [False] * d.num_nodes
    seen[d.root] = True
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                depth[y] = depth[x] + 1
                order.append(y)
    return parent, depth


def bfs_node_order(d: Decomposition) -> list[int]:
    """Breadth-first node order from the root (root first)."""
    if d.root is None:
        raise StateError("decomposition is not rooted")
    adj = d.node_adjacency()
    order = [d.root]
    seen = [False] * d.num_nodes
    seen[d.root] = True
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                order.append(y)
    return order


def origin(d: Decomposition, u: int, w: int) -> int:
    """Nearest common ancestor of tau(u) and tau(w) in the rooted tree."""
    parent, depth = rooted_parents(d)
    a, b = d.tau[u], d.tau[w]
    while depth[a] > depth[b]:
        a = parent[a]
    while depth[b] > depth[a]:
        b = parent[b]
    while a != b:
        a, b = parent[a], parent[b]
    return a


def subtree_preimages(g: Graph, d: Decomposition) -> list[int]:
    """For each node v, the bitset of vertices mapped into the subtree at v."""
    parent, depth = rooted_parents(d)
    pre = [0] * d.num_nodes
    for v, node in enumerate(d.tau):
        pre[node] |= 1 << v
    for x in sorted(range(d.num_nodes), key=lambda y: -depth[y]):
        if parent[x] != -1:
            pre[parent[x]] |= pre[x]
    return pre


def outside_partition(g: Graph, d: Decomposition, v: int) -> list[int]:
    """Partition of the subtree preimage V_v by neighborhoods outside V_v.

    Index 0 is the class with no outside neighbors (possibly empty); the
    remaining classes are ordered by their outside-neighborhood bitsets.
    """
    if d.root is None:
        raise StateError("decomposition is not rooted")
    if v == d.root:
        raise InputError("outside partition is undefined at the root")
    vv = subtree_preimages(g, d)[v]
    groups: dict[int, int] = {}
    for u in iter_bits(vv):
        out = g.adj[u] & ~vv
        groups[out] = groups.get(out, 0) | (1 << u)
    classes = [groups.pop(0, 0)]
    classes.extend(groups[key] for key in sorted(groups))
    return classes


def restrict(g: Graph, d: Decomposition, s: int) -> tuple[Graph, Decomposition, dict[int, int]]:
    """Induced subgraph on s with tau restricted; tree and root unchanged."""
    h, remap = induced_subgraph(g, s)
    tau = [0] * h.n
    for old, new in remap.items():
        tau[new] = d.tau[old]
    return h, replace(d, tau=tuple(tau)), remap


def root_normalize(d: Decomposition) -> Decomposition:
    """Ensure a root leaf with empty preimage, attaching a fresh leaf if needed.

    The added edge induces the degenerate (empty, V) cut of rank zero, so rank
    and diversity are unchanged.
    """
    if d.root is not None:
        return d
    adj = d.node_adjacency()
    used = set(d.tau)
    for v in range(d.num_nodes):
        if len(adj[v]) <= 1 and v not in used:
            return replace(d, root=v)
    fresh = d.num_nodes
    return Decomposition(
        num_nodes=d.num_nodes + 1,
        tree_edges=d.tree_edges + ((0, fresh),),
        tau=d.tau,
        root=fresh,
    )


def star_decomposition(g: Graph) -> Decomposition:
    """Star tree with every vertex on its own leaf and an empty center."""
    n = g.n
    if n == 0:
        return Decomposition(1, (), ())
    edges = tuple((0, i + 1) for i in range(n))
    return Decomposition(n + 1, edges, tuple(v + 1 for v in range(n)))


def validate_rank_decomposition(g: Graph, d: Decomposition) -> RankDecomposition:
    """Check the cubic-tree/leaf-bijection shape and report the width."""
    adj = d.node_adjacency()
    leaves = {v for v in range(d.num_nodes) if len(adj[v]) <= 1}
    for v in range(d.num_nodes):
        if v not in leaves and len(adj[v]) != 3:
            raise ValidationError(f"inner node {v} has degree {len(adj[v])}, expected 3")
    if len(set(d.tau)) != len(d.tau):
        raise ValidationError("tau is not injective")
    for v, node in enumerate(d.tau):
        if node not in leaves:
            raise ValidationError(f"vertex {v} is mapped to inner node {node}")
    uncovered = leaves - set(d.tau)
    if uncovered:
        raise ValidationError(f"leaves {sorted(uncovered)} carry no vertex")
    return RankDecomposition(d, decomposition_rank(g, d))


def exact_rank_width(
    g: Graph, limit: int | None = None, leaf_order: list[int] | None = None
) -> tuple[int, RankDecomposition]:
    """Minimum width over all leaf-labeled unrooted cubic trees, with witness.

    Enumerates the (2n-5)!! cubic trees by iterative leaf insertion, aborting
    the evaluation of a candidate as soon as a cut reaches the best width
    found so far.  leaf_order controls the insertion order (any permutation of
    the vertices); results agree for all orders.
    """
    n = g.n
    cap = limit if limit is not None else LIMITS.rank_width_n
    if n > cap:
        raise ResourceError(f"exact rank-width limited to n <= {cap} (got {n})")
    if n <= 1:
        d = Decomposition(1, (), tuple(0 for _ in range(n)))
        return 0, RankDecomposition(d, 0)

    order = list(range(n)) if leaf_order is None else list(leaf_order)
    if sorted(order) != list(range(n)):
        raise InputError("leaf_order must be a permutation of the vertices")

    full = g.vertex_mask
    rank_memo: dict[int, int] = {}

    def rank_of(mask: int) -> int:
        key = min(mask, full ^ mask)
        r = rank_memo.get(key)
        if r is None:
            other = full ^ key
            r = 0
            pivots: dict[int, int] = {}
            for u in iter_bits(key):
                row = g.adj[u] & other
                while row:
                    lead = row.bit_length() - 1
                    if lead in pivots:
                        row ^= pivots[lead]
                    else:
                        pivots[lead] = row
                        r += 1
                        break
            rank_memo[key] = r
        return r

    root_leaf = order[0]
    first = order[1]
    parent: dict[int, int] = {first: root_leaf}
    mask: dict[int, int] = {first: 1 << first}
    nodes = [first]  # every node except the root leaf; edge = (node, parent)
    best_width = n + 1
    best_parent: dict[int, int] | None = None

    def evaluate() -> None:
        nonlocal best_width, best_parent
        w = 0
        for v in nodes:
            r = rank_of(mask[v])
            if r > w:
                w = r
                if w >= best_width:
                    return
        best_width = w
        best_parent = dict(parent)

    def insert(idx: int) -> None:
        if idx == n:
            evaluate()
            return
        m = order[idx]
        mbit = 1 << m
        t = n + idx - 2  # one fresh internal node per inserted leaf
        for c in list(nodes):
            p = parent[c]
            parent[t] = p
            parent[c] = t
            parent[m] = t
            mask[t] = mask[c] | mbit
            mask[m] = mbit
            anc = p
            while anc != root_leaf:
                mask[anc] |= mbit
                anc = parent[anc]
            nodes.append(t)
            nodes.append(m)

            insert(idx + 1)

            nodes.pop()
            nodes.pop()
            anc = p
            while anc != root_leaf:
                mask[anc] &= ~mbit
                anc = parent[anc]
            parent[c] = p
            del parent[t], parent[m], mask[t], mask[m]

    insert(2)
    assert best_parent is not None
    num_nodes = 2 * n - 2
    # Node ids: leaves are the vertex ids, internals were allocated at n..2n-3.
    edges = tuple(sorted((v, p) if v < p else (p, v) for v, p in best_parent.items()))
    d = Decomposition(num_nodes, edges, tuple(range(n)))
    return best_width, validate_rank_decomposition(g, d)
