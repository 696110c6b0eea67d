"""Indexing of game states.

A cop configuration is a sorted k-tuple over vertices 0..n-1 (a multiset:
cops may share a vertex).  Configurations are ranked by the colex rule:
map (c_0 <= ... <= c_{k-1}) to the strictly increasing (c_i + i) and sum
C(c_i + i, i + 1).  Ranks are a bijection onto 0..C(n+k-1, k)-1.

A full state id is (rank * n + robber) * 2 + side, side 0 = cops to move.
Both fixpoint kernels and the Python API layer must agree on this scheme;
the compiled kernel re-derives it internally and is cross-checked in tests.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def state_space_size(n: int, k: int) -> int:
    return comb(n + k - 1, k) * n * 2


def rank_multiset(cops: tuple[int, ...]) -> int:
    """Colex rank of a sorted cop tuple."""
    return sum(comb(c + i, i + 1) for i, c in enumerate(cops))


def unrank_multiset(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of rank_multiset."""
    out = [0] * k
    rem = rank
    for i in range(k - 1, -1, -1):
        d = i  # smallest valid value of c_i + i
        while comb(d + 1, i + 1) <= rem:
            d += 1
        rem -= comb(d, i + 1)
        out[i] = d - i
    return tuple(out)


def iter_multisets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All sorted k-tuples over 0..n-1 in lexicographic order."""
    cur = [0] * k
    while True:
        yield tuple(cur)
        i = k - 1
        while i >= 0 and cur[i] == n - 1:
            i -= 1
        if i < 0:
            return
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[i]


def state_id(n: int, cops: tuple[int, ...], robber: int, side: int) -> int:
    return (rank_multiset(cops) * n + robber) * 2 + side
