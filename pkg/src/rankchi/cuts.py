"""Cut matrices of vertex bipartitions, GF(2) rank, and diversity."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class CutMatrix:
    """0/1 matrix of a cut (W, V\\W); rows[i] is a bitset over col_index."""

    rows: tuple[int, ...]
    row_index: tuple[int, ...]
    col_index: tuple[int, ...]


def cut_matrix(g: Graph, w: int) -> CutMatrix:
    """Matrix of the cut (w, V(g)\\w); empty when either side is empty."""
    if w & ~g.vertex_mask:
        raise InputError("cut side contains vertices outside the graph")
    row_index = tuple(iter_bits(w))
    col_index = tuple(iter_bits(g.vertex_mask & ~w))
    colpos = {v: i for i, v in enumerate(col_index)}
    rows = []
    for u in row_index:
        r = 0
        for v in iter_bits(g.adj[u] & ~w):
            r |= 1 << colpos[v]
        rows.append(r)
    return CutMatrix(tuple(rows), row_index, col_index)


def transpose(m: CutMatrix) -> CutMatrix:
    cols = []
    for j in range(len(m.col_index)):
        c = 0
        for i, row in enumerate(m.rows):
            if row >> j & 1:
                c |= 1 << i
        cols.append(c)
    return CutMatrix(tuple(cols), m.col_index, m.row_index)


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of bitset rows, by elimination on leading bits."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in pivots:
                row ^= pivots[lead]
            else:
                pivots[lead] = row
                rank += 1
                break
    return rank


def cut_rank(m: CutMatrix) -> int:
    """GF(2) rank of the cut matrix; 0 for an empty matrix."""
    if not m.rows or not m.col_index:
        return 0
    return gf2_rank(list(m.rows))


def cut_diversity(m: CutMatrix) -> int:
    """max(#distinct rows, #distinct columns); 0 for an empty matrix."""
    if not m.rows or not m.col_index:
        return 0
    distinct_rows = len(set(m.rows))
    distinct_cols = len(set(transpose(m).rows))
    return max(distinct_rows, distinct_cols)


def cut_rank_of(g: Graph, w: int) -> int:
    """Rank of the cut (w, rest) without materializing column indices."""
    if w & ~g.vertex_mask:
        raise InputError("cut side contains vertices outside the graph")
    other = g.vertex_mask & ~w
    if not w or not other:
        return 0
    return gf2_rank([g.adj[u] & other for u in iter_bits(w)])
