"""Catalogs of small test graphs.

connected_catalog enumerates all connected graphs on up to `max_n` vertices
up to isomorphism, from scratch: iterate edge bitmasks, keep connected ones
whose labeling is degree-sorted (every isomorphism class has one), and
canonicalize by minimizing the bitmask over degree-class-preserving
permutations.  The known counts (1, 1, 2, 6, 21, 112 connected graphs on
1..6 vertices) are asserted, so a bug here fails loudly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from copsrobbers.graph import Graph
from copsrobbers.generators import gen_gnp
from copsrobbers.rng import make_rng

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def _connected_mask(n: int, mask: int, edges: list[tuple[int, int]]) -> bool:
    adj = [0] * n
    for idx, (u, v) in enumerate(edges):
        if mask >> idx & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        rest = adj[u] & ~seen
        while rest:
            b = rest & -rest
            seen |= b
            stack.append(b.bit_length() - 1)
            rest ^= b
    return seen == (1 << n) - 1


@lru_cache(maxsize=8)
def _connected_canonical_masks(n: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    edges = list(combinations(range(n), 2))
    edge_index = {e: i for i, e in enumerate(edges)}
    canon: set[int] = set()
    for mask in range(1 << len(edges)):
        degrees = [0] * n
        for idx, (u, v) in enumerate(edges):
            if mask >> idx & 1:
                degrees[u] += 1
                degrees[v] += 1
        if any(degrees[i] < degrees[i + 1] for i in range(n - 1)):
            continue
        if not _connected_mask(n, mask, edges):
            continue
        # vertices of equal degree may be permuted freely
        classes: list[list[int]] = []
        start = 0
        for i in range(1, n + 1):
            if i == n or degrees[i] != degrees[start]:
                classes.append(list(range(start, i)))
                start = i
        best = mask
        for parts in product(*(permutations(cls) for cls in classes)):
            perm = [0] * n
            for cls, image in zip(classes, parts):
                for src, dst in zip(cls, image):
                    perm[src] = dst
            permuted = 0
            for idx, (u, v) in enumerate(edges):
                if mask >> idx & 1:
                    pu, pv = perm[u], perm[v]
                    if pu > pv:
                        pu, pv = pv, pu
                    permuted |= 1 << edge_index[(pu, pv)]
            if permuted < best:
                best = permuted
        canon.add(best)
    return tuple((m, tuple(edges)) for m in sorted(canon))


def connected_catalog(max_n: int = 6) -> dict[int, list[Graph]]:
    """All connected graphs on 1..max_n vertices, one per isomorphism class."""
    result: dict[int, list[Graph]] = {}
    for n in range(1, max_n + 1):
        graphs = []
        for mask, edges in _connected_canonical_masks(n):
            chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
            graphs.append(Graph.from_edges(n, chosen))
        if n in CONNECTED_COUNTS:
            assert len(graphs) == CONNECTED_COUNTS[n], (
                f"catalog bug: {len(graphs)} connected graphs on {n} vertices, "
                f"expected {CONNECTED_COUNTS[n]}"
            )
        result[n] = graphs
    return result


def random_connected(n: int, count: int, seed: int) -> list[Graph]:
    """Seeded connected G(n, p) samples (no isomorphism reduction)."""
    import math

    from copsrobbers.graph import is_connected

    p = min(0.9, 2.0 * math.log(n) / n + 0.1)
    out = []
    attempt = 0
    while len(out) < count:
        g = gen_gnp(n, p, seed * 10_000 + attempt)
        attempt += 1
        if is_connected(g):
            out.append(g)
        if attempt > 100 * count:
            raise RuntimeError("rejection sampling is not terminating")
    return out


def random_planar_triangulation(n: int, seed: int) -> Graph:
    """Delaunay triangulation of n seeded random points (planar, connected)."""
    from scipy.spatial import Delaunay

    rng = make_rng(seed)
    pts = rng.random((n, 2))
    tri = Delaunay(pts)
    edges = set()
    for simplex in tri.simplices:
        for i in range(3):
            u, v = int(simplex[i]), int(simplex[(i + 1) % 3])
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))
