"""Coalition predicate, certified partition verification, and the exact
coalition-number solver.

The solver searches for a partition of order k by descending k from the
degree bound floor((max_degree+3)^2 / 4); the first k admitting a witness
is the coalition number.  Each k is searched independently: existence of
an order-k partition is not assumed to imply existence at k-1.

Two interchangeable search backends exist (see _search_py/_search_nb); the
environment variable COALITION_BACKEND forces "python" or "numba", default
is numba whenever it is importable and the order fits in one word.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from . import _search_py
from .domination import NeighborhoodTable, build_table, is_dominating_mask
from .graphs import Graph, VertexSet, bits_to_list
from .partitions import Partition, partition_from_assignment

BACKEND_ENV = "COALITION_BACKEND"

NOT_A_PARTITION = "NotAPartition"
DOMINATING_BLOCK_NOT_SINGLETON = "DominatingBlockNotSingleton"
NON_DOMINATING_BLOCK_WITHOUT_PARTNER = "NonDominatingBlockWithoutPartner"

try:
    from . import _search_nb

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    _search_nb = None
    _HAVE_NUMBA = False


@dataclass(frozen=True)
class DominatingSingleton:
    """Block is {vertex} and the vertex has degree n-1."""

    vertex: int


@dataclass(frozen=True)
class Partner:
    """Block forms a coalition with the block at this index."""

    index: int


@dataclass(frozen=True)
class CoalitionCertificate:
    """Per-block proof that a partition is a coalition partition."""

    entries: tuple[DominatingSingleton | Partner, ...]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Rejection:
    """Why a partition fails, naming the first offending block (if any)."""

    reason: str
    block: int | None = None

    def __bool__(self) -> bool:
        return False


@dataclass
class SearchOutcome:
    """Result of a single order-k existence search."""

    partition: Partition | None
    exhausted: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.partition is not None


@dataclass
class SolveResult:
    """Exact solve: value is C(G) when status == "ok".

    status "none" means the exhaustive descent found no coalition partition
    of any order (value 0); status "budget" means the node budget ran out,
    with orders >= smallest_refuted excluded and the rest inconclusive.
    """

    value: int | None
    witness: Partition | None
    certificate: CoalitionCertificate | None
    nodes: int
    ms: float
    status: str
    smallest_refuted: int | None = None


def upper_bound(G: Graph) -> int:
    """floor((max_degree + 3)^2 / 4), valid for every graph."""
    d = G.max_degree()
    return (d + 3) * (d + 3) // 4


def is_coalition(T: NeighborhoodTable, A: VertexSet, B: VertexSet) -> bool:
    """Neither side dominates, their union does."""
    if A.universe != T.n or B.universe != T.n:
        raise ValueError("vertex set universe does not match table")
    if not A.bits or not B.bits:
        raise ValueError("coalition sides must be nonempty")
    if A.bits & B.bits:
        raise ValueError("coalition sides must be disjoint")
    return (
        not is_dominating_mask(T, A.bits)
        and not is_dominating_mask(T, B.bits)
        and is_dominating_mask(T, A.bits | B.bits)
    )


def verify_partition(
    G: Graph, P: Partition
) -> CoalitionCertificate | Rejection:
    """Check the coalition-partition laws, returning proof or rejection.

    Every block must either be a dominating singleton (degree n-1 vertex)
    or a non-dominating block with a coalition partner; the certificate
    records the witness vertex or the lowest-index valid partner.
    """
    if P.universe != G.n:
        return Rejection(NOT_A_PARTITION)
    seen = 0
    for i, blk in enumerate(P.blocks):
        if not blk.bits:
            return Rejection(NOT_A_PARTITION, i)
        if seen & blk.bits:
            return Rejection(NOT_A_PARTITION, i)
        seen |= blk.bits
    if seen != (1 << G.n) - 1:
        return Rejection(NOT_A_PARTITION)

    T = build_table(G)
    masks = P.block_masks()
    dominating = [is_dominating_mask(T, m) for m in masks]

    entries: list[DominatingSingleton | Partner] = []
    for i, m in enumerate(masks):
        if dominating[i]:
            members = bits_to_list(m)
            if len(members) != 1:
                return Rejection(DOMINATING_BLOCK_NOT_SINGLETON, i)
            entries.append(DominatingSingleton(members[0]))
            continue
        partner = -1
        for j, mj in enumerate(masks):
            if j == i or dominating[j]:
                continue
            if is_dominating_mask(T, m | mj):
                partner = j
                break
        if partner < 0:
            return Rejection(NON_DOMINATING_BLOCK_WITHOUT_PARTNER, i)
        entries.append(Partner(partner))
    return CoalitionCertificate(tuple(entries))


def _backend_name(n: int) -> str:
    forced = os.environ.get(BACKEND_ENV, "").strip().lower()
    if forced == "python":
        return "python"
    if forced == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("COALITION_BACKEND=numba but numba is unavailable")
        if n > 64:
            raise RuntimeError("numba backend supports orders up to 64")
        return "numba"
    if _HAVE_NUMBA and n <= 64:
        return "numba"
    return "python"


def _decide_order(closed, n, k, budget):
    if _backend_name(n) == "numba":
        return _search_nb.decide_order_nb(closed, n, k, budget)
    return _search_py.decide_order_py(closed, n, k, budget)


def warmup_backend() -> None:
    """Pre-compile the numba kernel (useful before forking workers)."""
    if _HAVE_NUMBA:
        _search_nb.warmup()


def exists_partition_of_order(
    G: Graph, k: int, budget: int | None = None
) -> SearchOutcome:
    """First coalition partition with exactly k blocks, in canonical order.

    Returns SearchOutcome: partition set on success, exhausted=True when
    the node budget ran out (inconclusive), both unset for a refutation.
    """
    if not 1 <= k <= G.n:
        raise ValueError(f"order {k} outside 1..{G.n}")
    T = build_table(G)
    status, asg, nodes = _decide_order(T.closed, G.n, k, budget or 0)
    if status == _search_py.FOUND:
        part = partition_from_assignment(G.n, asg)
        cert = verify_partition(G, part)
        if isinstance(cert, Rejection):  # pragma: no cover - soundness guard
            raise RuntimeError(
                f"internal error: search witness failed verification: {cert}"
            )
        return SearchOutcome(part, False, nodes)
    if status == _search_py.EXHAUSTED:
        return SearchOutcome(None, True, nodes)
    return SearchOutcome(None, False, nodes)


def coalition_number(G: Graph, budget: int | None = None) -> SolveResult:
    """Exact C(G) by descending k from the degree bound.

    The first order admitting a witness is maximal because every larger
    order was exhaustively refuted first.  The witness is re-verified and
    its certificate attached.  A budget (total search nodes) turns an
    undecided descent into status "budget" rather than a wrong answer.
    """
    t0 = time.perf_counter()
    start = min(upper_bound(G), G.n)
    total_nodes = 0
    for k in range(start, 0, -1):
        remaining = None if budget is None else max(budget - total_nodes, 1)
        outcome = exists_partition_of_order(G, k, remaining)
        total_nodes += outcome.nodes
        ms = (time.perf_counter() - t0) * 1000.0
        if outcome.found:
            cert = verify_partition(G, outcome.partition)
            assert isinstance(cert, CoalitionCertificate)
            return SolveResult(k, outcome.partition, cert, total_nodes, ms, "ok")
        if outcome.exhausted:
            refuted = k + 1 if k < start else None
            return SolveResult(
                None, None, None, total_nodes, ms, "budget",
                smallest_refuted=refuted,
            )
    ms = (time.perf_counter() - t0) * 1000.0
    return SolveResult(0, None, None, total_nodes, ms, "none")


def brute_force_coalition_number(G: Graph, max_order: int = 12) -> int:
    """Testing oracle: maximum order over ALL set partitions that verify.

    Enumerates every set partition of the vertex set (restricted-growth
    strings, no pruning) and checks each with verify_partition; returns 0
    if none passes.  Guarded to small orders since Bell(n) explodes.
    """
    n = G.n
    if n > max_order:
        raise ValueError(f"brute force limited to n <= {max_order}")
    best = 0
    asg = [0] * n

    def rec(v: int, nblocks: int) -> None:
        nonlocal best
        if v == n:
            if nblocks > best:
                part = partition_from_assignment(n, asg)
                if isinstance(verify_partition(G, part), CoalitionCertificate):
                    best = nblocks
            return
        for b in range(nblocks + 1):
            asg[v] = b
            rec(v + 1, max(nblocks, b + 1))

    rec(0, 0)
    return best
