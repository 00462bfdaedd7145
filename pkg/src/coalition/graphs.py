"""Immutable bitmask graphs on vertex sets {0, ..., n-1}.

Adjacency is stored as one Python integer per vertex, bit v of ``adj[u]``
meaning the edge uv.  Arbitrary-precision ints make the same code work for
any order up to MAX_ORDER; the hot search kernels convert to fixed-width
words separately.
"""

from __future__ import annotations

from collections.abc import Iterable

MAX_ORDER = 256


class GraphError(ValueError):
    """Malformed graph input (bad vertex, self-loop, broken invariant)."""


class Graph:
    """Simple undirected graph, immutable after construction.

    Invariants checked on construction: no self-loops, symmetric adjacency,
    no bits at positions >= n, and the handshake identity 2m = sum(deg).
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        span = (1 << n) - 1
        degsum = 0
        for v, row in enumerate(adj):
            if row >> n:
                raise GraphError(f"vertex {v}: neighbor bits beyond universe")
            if row & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            degsum += bin(row & span).count("1")
        for v in range(n):
            row = adj[v]
            u = row
            while u:
                w = (u & -u).bit_length() - 1
                if not adj[w] & (1 << v):
                    raise GraphError(f"asymmetric edge {v}-{w}")
                u &= u - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "m", degsum // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")
        return bin(self.adj[v]).count("1")

    def max_degree(self) -> int:
        return max(bin(row).count("1") for row in self.adj)

    def is_regular(self, r: int) -> bool:
        return all(bin(row).count("1") == r for row in self.adj)

    def is_connected(self) -> bool:
        """True iff a breadth-first sweep from vertex 0 reaches everything."""
        full = (1 << self.n) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge endpoint out of range: ({u},{v})")
        return bool(self.adj[u] & (1 << v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            while rest:
                v = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                out.append((u, u + 1 + v))
        return out

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")
        return bits_to_list(self.adj[v])


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from unordered vertex pairs; duplicate pairs collapse."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


class VertexSet:
    """Subset of {0, ..., universe-1} as a bitmask."""

    __slots__ = ("universe", "bits")

    def __init__(self, universe: int, bits: int = 0):
        if bits >> universe:
            raise GraphError("member bits beyond universe")
        if bits < 0:
            raise GraphError("negative bitmask")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < universe:
                raise GraphError(f"vertex {v} outside universe 0..{universe - 1}")
            bits |= 1 << v
        return cls(universe, bits)

    def members(self) -> list[int]:
        return bits_to_list(self.bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and bool(self.bits & (1 << v))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.universe == other.universe
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.bits))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.universe, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.universe, self.bits & other.bits)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return not self.bits & other.bits

    def _check_universe(self, other: "VertexSet") -> None:
        if self.universe != other.universe:
            raise GraphError("VertexSet universes differ")

    def __repr__(self) -> str:
        return f"VertexSet({self.universe}, {{{', '.join(map(str, self.members()))}}})"


def bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        out.append((bits & -bits).bit_length() - 1)
        bits &= bits - 1
    return out
