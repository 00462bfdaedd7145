"""Pure-Python search backend for order-k coalition partitions.

Depth-first assignment of vertices 0..n-1 to blocks in restricted-growth
order (vertex v may open block b only when blocks 0..b-1 exist), which
enumerates each set partition exactly once.  Pruning:

  * a partial block whose closed-neighborhood cover fills V is dead unless
    it was opened as a forced singleton (degree n-1 vertex);
  * open blocks plus unassigned vertices must still reach k, and every
    remaining forced vertex needs a fresh block of its own;
  * partner feasibility: with R the unassigned suffix, any vertex outside
    N[R] must be covered by the pair forming each block's coalition, so a
    block with no viable partner, now or among future blocks, is dead.

At a full assignment R is empty and the partner check degrades to the
exact coalition-partition condition, so a returned assignment is always a
witness.  The numba backend mirrors this code statement for statement;
node counts must stay identical between the two.

Status codes: 0 found, 1 exhausted search space (no partition of order k),
2 node budget hit.  The budget is polled every 2**14 accepted nodes.
"""

from __future__ import annotations

FOUND = 0
NONE = 1
EXHAUSTED = 2

BUDGET_POLL_MASK = (1 << 14) - 1


def decide_order_py(
    closed: tuple[int, ...], n: int, k: int, budget: int = 0
) -> tuple[int, list[int] | None, int]:
    """Search for a coalition partition with exactly k blocks.

    ``closed[v]`` is the closed-neighborhood bitmask of v; ``budget`` is a
    node limit (0 = unlimited).  Returns (status, assignment, nodes).
    """
    full = (1 << n) - 1

    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed[v]

    forced = [closed[v] == full for v in range(n)]
    forced_left = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        forced_left[v] = forced_left[v + 1] + (1 if forced[v] else 0)

    asg = [0] * n
    cov = [0] * k
    choice = [0] * (n + 1)
    st_open = [0] * n
    st_cov = [0] * n

    nopen = 0
    nodes = 0
    v = 0
    while True:
        if v == n:
            return FOUND, asg, nodes
        b = choice[v]
        maxb = nopen if nopen < k else k - 1
        placed = False
        while b <= maxb:
            opening = b == nopen
            oldcov = 0 if opening else cov[b]
            newcov = oldcov | closed[v]
            if newcov == full and not (opening and forced[v]):
                b += 1
                continue
            nopen2 = nopen + 1 if opening else nopen
            if nopen2 + (n - 1 - v) < k:
                b += 1
                continue
            if nopen2 + forced_left[v + 1] > k:
                b += 1
                continue
            cov[b] = newcov
            d = full ^ suffix[v + 1]
            if d and not _partners_feasible(cov, nopen2, k, full, d,
                                            forced_left[v + 1]):
                cov[b] = oldcov
                b += 1
                continue
            nodes += 1
            if budget and (nodes & BUDGET_POLL_MASK) == 0 and nodes >= budget:
                return EXHAUSTED, None, nodes
            asg[v] = b
            st_open[v] = nopen
            st_cov[v] = oldcov
            choice[v] = b
            nopen = nopen2
            v += 1
            choice[v] = 0
            placed = True
            break
        if placed:
            continue
        v -= 1
        if v < 0:
            return NONE, None, nodes
        b = choice[v]
        cov[b] = st_cov[v]
        nopen = st_open[v]
        choice[v] = b + 1


def _partners_feasible(cov, nopen, k, full, d, forced_ahead) -> bool:
    """Every block must still be able to meet a coalition partner.

    ``d`` is the set of vertices no future assignment can cover; a pair
    (i, j) can only end up dominating if cov[i] | cov[j] already covers d.
    Blocks with cov == full are forced dominating singletons and neither
    need nor provide partners.  A block covering d alone may instead pair
    with a not-yet-opened block, which exists iff more than ``forced_ahead``
    of the k - nopen remaining openings are free.
    """
    future_nonexempt = nopen < k and (k - nopen) > forced_ahead
    hub = False
    for i in range(nopen):
        ci = cov[i]
        if ci == full:
            continue
        ok = False
        if ci & d == d:
            hub = True
            if future_nonexempt:
                ok = True
        if not ok:
            for j in range(nopen):
                if j != i and cov[j] != full and (ci | cov[j]) & d == d:
                    ok = True
                    break
        if not ok:
            return False
    if future_nonexempt and not hub:
        return False
    return True
