"""Closed neighborhoods and domination predicates.

A NeighborhoodTable is built once per graph and shared read-only by every
query; the census layers issue these queries billions of times, so the
table exposes raw integer masks alongside the typed wrappers.
"""

from __future__ import annotations

from .graphs import Graph, VertexSet


class NeighborhoodTable:
    """Per-vertex closed neighborhoods N[v] = {v} | adj[v] as bitmasks."""

    __slots__ = ("n", "closed", "full")

    def __init__(self, n: int, closed: tuple[int, ...]):
        self.n = n
        self.closed = closed
        self.full = (1 << n) - 1

    def closed_set(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.closed[v])


def build_table(G: Graph) -> NeighborhoodTable:
    return NeighborhoodTable(G.n, tuple(G.adj[v] | (1 << v) for v in range(G.n)))


def dominated_mask(T: NeighborhoodTable, bits: int) -> int:
    """Union of closed neighborhoods over the members of ``bits``."""
    out = 0
    while bits:
        v = (bits & -bits).bit_length() - 1
        bits &= bits - 1
        out |= T.closed[v]
    return out


def dominated_by(T: NeighborhoodTable, S: VertexSet) -> VertexSet:
    if S.universe != T.n:
        raise ValueError("vertex set universe does not match table")
    return VertexSet(T.n, dominated_mask(T, S.bits))


def is_dominating_mask(T: NeighborhoodTable, bits: int) -> bool:
    return dominated_mask(T, bits) == T.full


def is_dominating(T: NeighborhoodTable, S: VertexSet) -> bool:
    """True iff every vertex of the graph lies in some N[v], v in S."""
    if S.universe != T.n:
        raise ValueError("vertex set universe does not match table")
    return is_dominating_mask(T, S.bits)
