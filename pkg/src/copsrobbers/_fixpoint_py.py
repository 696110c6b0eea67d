"""Pure-Python fixpoint kernel for the k-cop pursuit game.

Backward induction over the game digraph, organized as level-synchronized
capture-time waves: level 0 holds every state where a cop stands on the
robber, level t+1 is computed from levels <= t only.  A cops-to-move state
wins one level above its best already-won successor; a robber-to-move state
wins at the level of its worst successor, tracked with a countdown over the
robber's closed neighborhood (the classic attractor counter).

This module is the fallback lane; copsrobbers._fixpoint is the compiled
twin with the same contract.  Keep the two in sync.
"""

from __future__ import annotations

from math import comb

import numpy as np

KERNEL_NAME = "python"


def solve_levels(n: int, k: int, closed: list[tuple[int, ...]]) -> np.ndarray:
    """Capture-time level per state id, -1 where the robber evades forever.

    `closed` lists each vertex's closed neighborhood (v plus its neighbors,
    sorted).  State ids follow copsrobbers._states.
    """
    m = n + k - 1
    binom = [[comb(d, j) for j in range(k + 2)] for d in range(m + 2)]
    big_m = binom[m][k]
    total = big_m * n * 2

    levels = [-1] * total
    counter = [0] * (big_m * n)

    # enumerate all sorted cop tuples; remember values per rank
    tuples_flat = [0] * (big_m * k)
    cur = [0] * k
    queue: list[int] = []
    while True:
        rank = 0
        for i in range(k):
            rank += binom[cur[i] + i][i + 1]
        base = rank * k
        for i in range(k):
            tuples_flat[base + i] = cur[i]
        row = rank * n
        for r in range(n):
            counter[row + r] = len(closed[r])
        prev = -1
        for v in cur:
            if v != prev:
                sid = (row + v) * 2
                levels[sid] = 0
                levels[sid + 1] = 0
                queue.append(sid)
                queue.append(sid + 1)
                prev = v
        i = k - 1
        while i >= 0 and cur[i] == n - 1:
            i -= 1
        if i < 0:
            break
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[i]

    level = 0
    while queue:
        next_queue: list[int] = []
        idx = 0
        while idx < len(queue):
            sid = queue[idx]
            idx += 1
            half = sid >> 1
            rank, robber = divmod(half, n)
            if sid & 1:
                # robber-to-move state newly won at `level`: every
                # cops-to-move predecessor reaches it in one joint move
                base = rank * k
                cops = tuples_flat[base : base + k]
                options = [closed[c] for c in cops]
                counts = [len(o) for o in options]
                pos = [0] * k
                vals = [o[0] for o in options]
                while True:
                    pre_rank = 0
                    for c, off in zip(sorted(vals), range(k)):
                        pre_rank += binom[c + off][off + 1]
                    pid = (pre_rank * n + robber) * 2
                    if levels[pid] < 0:
                        levels[pid] = level + 1
                        next_queue.append(pid)
                    j = k - 1
                    while j >= 0 and pos[j] == counts[j] - 1:
                        pos[j] = 0
                        vals[j] = options[j][0]
                        j -= 1
                    if j < 0:
                        break
                    pos[j] += 1
                    vals[j] = options[j][pos[j]]
            else:
                # cops-to-move state won: one more robber option is burnt in
                # every robber-to-move predecessor; when none remain, that
                # predecessor wins at the same level (its worst reply)
                row = rank * n
                for r2 in closed[robber]:
                    rid = (row + r2) * 2 + 1
                    if levels[rid] < 0:
                        cell = row + r2
                        counter[cell] -= 1
                        if counter[cell] == 0:
                            levels[rid] = level
                            queue.append(rid)
        queue = next_queue
        level += 1

    return np.asarray(levels, dtype=np.int32)
