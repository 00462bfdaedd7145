"""Numba-compiled search backend (orders up to 64).

Statement-for-statement mirror of ``_search_py.decide_order_py`` on
uint64 masks; the two must stay in lockstep, including node counts, so
that the backend equivalence tests can compare them exactly.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND = 0
NONE = 1
EXHAUSTED = 2

BUDGET_POLL_MASK = np.int64((1 << 14) - 1)

U0 = np.uint64(0)


@njit(cache=True)
def _partners_feasible(cov, nopen, k, full, d, forced_ahead):
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


@njit(cache=True)
def _decide_order_nb(closed, n, k, budget, full):
    suffix = np.zeros(n + 1, dtype=np.uint64)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed[v]

    forced = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        forced[v] = closed[v] == full
    forced_left = np.zeros(n + 1, dtype=np.int64)
    for v in range(n - 1, -1, -1):
        forced_left[v] = forced_left[v + 1] + (1 if forced[v] else 0)

    asg = np.zeros(n, dtype=np.int64)
    cov = np.zeros(k, dtype=np.uint64)
    choice = np.zeros(n + 1, dtype=np.int64)
    st_open = np.zeros(n, dtype=np.int64)
    st_cov = np.zeros(n, dtype=np.uint64)

    nopen = 0
    nodes = np.int64(0)
    v = 0
    while True:
        if v == n:
            return FOUND, asg, nodes
        b = choice[v]
        maxb = nopen if nopen < k else k - 1
        placed = False
        while b <= maxb:
            opening = b == nopen
            oldcov = U0 if opening else cov[b]
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
            if d != U0 and not _partners_feasible(cov, nopen2, k, full, d,
                                                  forced_left[v + 1]):
                cov[b] = oldcov
                b += 1
                continue
            nodes += 1
            if budget > 0 and (nodes & BUDGET_POLL_MASK) == 0 and nodes >= budget:
                return EXHAUSTED, asg, nodes
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
            return NONE, asg, nodes
        b = choice[v]
        cov[b] = st_cov[v]
        nopen = st_open[v]
        choice[v] = b + 1


def decide_order_nb(
    closed: tuple[int, ...], n: int, k: int, budget: int = 0
) -> tuple[int, list[int] | None, int]:
    """Numba-backed equivalent of decide_order_py (requires n <= 64)."""
    if n > 64:
        raise ValueError("numba backend supports orders up to 64")
    closed_arr = np.array(closed, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    status, asg, nodes = _decide_order_nb(
        closed_arr, n, k, np.int64(budget), full
    )
    if status == FOUND:
        return status, [int(b) for b in asg], int(nodes)
    return status, None, int(nodes)


def warmup() -> None:
    """Trigger JIT compilation (call before forking scan workers)."""
    decide_order_nb((3, 3), 2, 2, 0)
