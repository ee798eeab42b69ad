"""Pure numpy/python kernels: vectorized table construction, plain-python
orbit walks.  Reference fallback for the numba backend."""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def build_tables(n: int, d: int, l1: int, l2: int):
    """Packed successor table over all n*n states plus per-state move flags.

    States are packed as s = x1*n + x2.  Inadmissible states get succ = -1
    and zero move flags.  A cluster covers cell c iff (front - c) mod n < l,
    which turns node straddling and blocking into array arithmetic.
    """
    x1 = np.repeat(np.arange(n), n)
    x2 = np.tile(np.arange(n), n)
    e1, e2 = n - 1, d - 1  # node entry cells; exits are 0 and d

    def straddles(x, l, entry, exit_):
        return ((x - entry) % n < l) & ((x - exit_) % n < l)

    o1n1 = straddles(x1, l1, e1, 0)
    o1n2 = straddles(x1, l1, e2, d)
    o2n1 = straddles(x2, l2, e1, 0)
    o2n2 = straddles(x2, l2, e2, d)
    admissible = ~((o1n1 & o2n1) | (o1n2 & o2n2))

    b1 = ((x1 == e1) & o2n1) | ((x1 == e2) & o2n2)
    # cluster 2 additionally loses same-node ties
    b2 = ((x2 == e1) & (o1n1 | (x1 == e1))) | ((x2 == e2) & (o1n2 | (x1 == e2)))

    nx1 = np.where(b1, x1, (x1 + 1) % n)
    nx2 = np.where(b2, x2, (x2 + 1) % n)
    succ = np.where(admissible, nx1 * n + nx2, -1).astype(np.int32)
    moved1 = (admissible & ~b1).astype(np.uint8)
    moved2 = (admissible & ~b2).astype(np.uint8)
    return succ, moved1, moved2


def scan_all(n: int, succ, moved1, moved2):
    """Orbit decomposition for every admissible start state.

    Returns int64 arrays (transient, period, a1, a2, rep) indexed by packed
    state; -1 entries mark inadmissible starts.  a_i counts cluster-i moves
    over one period; rep is the smallest packed state on the orbit's cycle,
    a canonical cycle id shared by all states draining into it.
    """
    size = n * n
    transient = np.full(size, -1, np.int64)
    period = np.full(size, -1, np.int64)
    a1 = np.full(size, -1, np.int64)
    a2 = np.full(size, -1, np.int64)
    rep = np.full(size, -1, np.int64)

    succ_l = succ.tolist()
    m1_l = moved1.tolist()
    m2_l = moved2.tolist()
    stamp = [-1] * size  # start id of the walk that last touched the state
    tvisit = [0] * size

    for s0 in range(size):
        if succ_l[s0] < 0:
            continue
        s = s0
        t = 0
        while stamp[s] != s0:
            stamp[s] = s0
            tvisit[s] = t
            s = succ_l[s]
            t += 1
        tr = tvisit[s]
        tperiod = t - tr
        c = s
        r = s
        m1 = 0
        m2 = 0
        for _ in range(tperiod):
            m1 += m1_l[c]
            m2 += m2_l[c]
            c = succ_l[c]
            if c < r:
                r = c
        transient[s0] = tr
        period[s0] = tperiod
        a1[s0] = m1
        a2[s0] = m2
        rep[s0] = r
    return transient, period, a1, a2, rep
