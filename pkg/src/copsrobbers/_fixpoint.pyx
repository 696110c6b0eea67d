# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled fixpoint kernel for the k-cop pursuit game.

Same contract and same level semantics as copsrobbers._fixpoint_py; see
that module for the algorithm description.  Keep the two in sync.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

KERNEL_NAME = "cython"

MAX_K = 16  # static scratch-array bound; k beyond this is absurd anyway


def solve_levels(int n, int k, closed):
    """Capture-time level per state id (int32), -1 = robber evades forever."""
    if k < 1 or k > 16:
        raise ValueError(f"cop count must be in 1..16, got {k}")

    cdef int m = n + k - 1
    cdef int i, j, d

    # Pascal table: binom[d * (k + 2) + j] = C(d, j)
    binom_np = np.zeros(((m + 2) * (k + 2),), dtype=np.int64)
    cdef cnp.int64_t[::1] binom = binom_np
    for d in range(m + 2):
        binom[d * (k + 2)] = 1
        for j in range(1, min(d, k + 1) + 1):
            binom[d * (k + 2) + j] = (
                binom[(d - 1) * (k + 2) + j - 1]
                + (binom[(d - 1) * (k + 2) + j] if j <= d - 1 else 0)
            )

    cdef long long big_m = binom[m * (k + 2) + k]
    cdef long long total = big_m * n * 2
    cdef long long rows = big_m * n

    # flattened closed neighborhoods
    lens = [len(nbrs) for nbrs in closed]
    cstarts_np = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] cstarts = cstarts_np
    for i in range(n):
        cstarts[i + 1] = cstarts[i] + lens[i]
    cflat_np = np.fromiter(
        (nbr for nbrs in closed for nbr in nbrs), dtype=np.int32, count=cstarts[n]
    )
    cdef cnp.int32_t[::1] cflat = cflat_np

    levels_np = np.full(total, -1, dtype=np.int32)
    cdef cnp.int32_t[::1] levels = levels_np
    counter_np = np.zeros(rows, dtype=np.int32)
    cdef cnp.int32_t[::1] counter = counter_np
    tuples_np = np.zeros(big_m * k, dtype=np.int32)
    cdef cnp.int32_t[::1] tuples_flat = tuples_np

    queue_np = np.zeros(total, dtype=np.int64)
    next_np = np.zeros(total, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = queue_np
    cdef cnp.int64_t[::1] next_queue = next_np
    cdef long long q_len = 0, nq_len = 0, q_idx

    cdef int cur[16]
    cdef int vals[16]
    cdef int srt[16]
    cdef long long pos[16]
    cdef long long opt_start[16]
    cdef long long opt_len[16]

    cdef long long rank, base, row, sid, pid, rid, half, pre_rank, cell
    cdef int r, v, prev, robber, level, c, key, p

    # ---- enumerate cop multisets: ranks, counters, capture states ----
    for i in range(k):
        cur[i] = 0
    while True:
        rank = 0
        for i in range(k):
            rank += binom[(cur[i] + i) * (k + 2) + i + 1]
        base = rank * k
        for i in range(k):
            tuples_flat[base + i] = cur[i]
        row = rank * n
        for r in range(n):
            counter[row + r] = <cnp.int32_t> (cstarts[r + 1] - cstarts[r])
        prev = -1
        for i in range(k):
            v = cur[i]
            if v != prev:
                sid = (row + v) * 2
                levels[sid] = 0
                levels[sid + 1] = 0
                queue[q_len] = sid
                q_len += 1
                queue[q_len] = sid + 1
                q_len += 1
                prev = v
        i = k - 1
        while i >= 0 and cur[i] == n - 1:
            i -= 1
        if i < 0:
            break
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[i]

    # ---- level-synchronized wave propagation ----
    level = 0
    while q_len > 0:
        nq_len = 0
        q_idx = 0
        while q_idx < q_len:
            sid = queue[q_idx]
            q_idx += 1
            half = sid >> 1
            rank = half // n
            robber = <int> (half - rank * n)
            if sid & 1:
                # robber-side newly won: cop-side predecessors win at level+1
                base = rank * k
                for i in range(k):
                    c = tuples_flat[base + i]
                    opt_start[i] = cstarts[c]
                    opt_len[i] = cstarts[c + 1] - cstarts[c]
                    pos[i] = 0
                    vals[i] = cflat[opt_start[i]]
                while True:
                    # insertion sort of vals into srt (k is tiny)
                    for i in range(k):
                        key = vals[i]
                        p = i - 1
                        while p >= 0 and srt[p] > key:
                            srt[p + 1] = srt[p]
                            p -= 1
                        srt[p + 1] = key
                    pre_rank = 0
                    for i in range(k):
                        pre_rank += binom[(srt[i] + i) * (k + 2) + i + 1]
                    pid = (pre_rank * n + robber) * 2
                    if levels[pid] < 0:
                        levels[pid] = level + 1
                        next_queue[nq_len] = pid
                        nq_len += 1
                    j = k - 1
                    while j >= 0 and pos[j] == opt_len[j] - 1:
                        pos[j] = 0
                        vals[j] = cflat[opt_start[j]]
                        j -= 1
                    if j < 0:
                        break
                    pos[j] += 1
                    vals[j] = cflat[opt_start[j] + pos[j]]
            else:
                # cop-side won: burn a robber option in each robber-side
                # predecessor; at zero it wins at the current level
                row = rank * n
                for j in range(<int> (cstarts[robber + 1] - cstarts[robber])):
                    r = cflat[cstarts[robber] + j]
                    rid = (row + r) * 2 + 1
                    if levels[rid] < 0:
                        cell = row + r
                        counter[cell] -= 1
                        if counter[cell] == 0:
                            levels[rid] = level
                            queue[q_len] = rid
                            q_len += 1
        # swap queues
        queue, next_queue = next_queue, queue
        q_len = nq_len
        level += 1

    return levels_np
