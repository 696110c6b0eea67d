"""Graph generators: named families, projective-plane incidence graphs,
G(n, p) random graphs and random trees.

Every generator returns a canonically labeled instance and is deterministic
given its parameters (randomized families additionally take a seed fed to
the package RNG).
"""

from __future__ import annotations

import heapq
from itertools import combinations

from .graph import Graph
from .rng import make_rng


def gen_path(n: int) -> Graph:
    _require_size("path", n, 1)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _require_size("cycle", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    _require_size("complete", n, 1)
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_grid(rows: int, cols: int) -> Graph:
    _require_size("grid", rows, 1)
    _require_size("grid", cols, 1)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def gen_hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError(f"hypercube dimension must be >= 0, got {d}")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph.from_edges(n, edges)


def gen_petersen() -> Graph:
    """Petersen graph as the Kneser graph K(5, 2).

    Vertices are the 2-subsets of {0..4} in lexicographic order; edges join
    disjoint pairs.  3-regular, girth 5, diameter 2.
    """
    pairs = list(combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[p], index[q])
        for p, q in combinations(pairs, 2)
        if not set(p) & set(q)
    ]
    return Graph.from_edges(10, edges)


def gen_dodecahedron() -> Graph:
    """Dodecahedral graph as the generalized Petersen graph GP(10, 2)."""
    m, s = 10, 2
    edges = []
    for i in range(m):
        edges.append((i, (i + 1) % m))          # outer cycle
        edges.append((i, m + i))                # spokes
        edges.append((m + i, m + (i + s) % m))  # inner cycle, step s
    return Graph.from_edges(2 * m, [(min(u, v), max(u, v)) for u, v in edges])


def gen_heawood() -> Graph:
    """Heawood graph: the point/line incidence graph of the Fano plane."""
    return gen_projective_incidence(2)


def gen_tree_random(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree via a Pruefer sequence."""
    _require_size("tree-random", n, 1)
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = make_rng(seed)
    prufer = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = sorted(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    """Canonical representatives of the projective plane PG(2, q).

    One triple per 1-dimensional subspace of GF(q)^3, normalized so the
    first nonzero coordinate is 1, listed lexicographically:
    (0,0,1), (0,1,c), (1,b,c).
    """
    pts = [(0, 0, 1)]
    pts += [(0, 1, c) for c in range(q)]
    pts += [(1, b, c) for b in range(q) for c in range(q)]
    return pts


def gen_projective_incidence(q: int) -> Graph:
    """Bipartite point/line incidence graph of PG(2, q) for prime q.

    Vertices 0..N-1 are points, N..2N-1 are lines (N = q^2 + q + 1); a point
    lies on a line iff their coordinate dot product is 0 mod q.  The result
    is (q+1)-regular with girth 6.  Prime powers are rejected: coordinates
    are integers mod q, and extension-field arithmetic is out of scope.
    """
    if not _is_prime(q):
        raise ValueError(
            f"q must be prime, got {q} (prime powers are unsupported)"
        )
    pts = _projective_points(q)
    n_side = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, n_side + j))
    return Graph.from_edges(2 * n_side, edges)


def projective_labels(q: int) -> list[str]:
    """Human-readable point/line labels matching gen_projective_incidence."""
    pts = _projective_points(q)
    return [f"point({x},{y},{z})" for x, y, z in pts] + [
        f"line[{x},{y},{z}]" for x, y, z in pts
    ]


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each unordered pair is an edge with probability p.

    Uniform draws are consumed row by row ((0,1), (0,2), ..., (n-2,n-1)), so
    a fixed (n, p, seed) always yields the same edge set.
    """
    _require_size("gnp", n, 1)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = make_rng(seed)
    edges = []
    for u in range(n - 1):
        draws = rng.random(n - 1 - u)
        for off in (draws < p).nonzero()[0]:
            edges.append((u, u + 1 + int(off)))
    return Graph.from_edges(n, edges)


_FIXED_FAMILIES = {
    "petersen": gen_petersen,
    "heawood": gen_heawood,
    "dodecahedron": gen_dodecahedron,
}


def gen_named(name: str, *params: int, seed: int = 0) -> Graph:
    """Dispatch on a family name; see the CLI for the spec-string form."""
    name = name.lower()
    if name in _FIXED_FAMILIES:
        _require_params(name, params, 0)
        return _FIXED_FAMILIES[name]()
    if name == "path":
        _require_params(name, params, 1)
        return gen_path(params[0])
    if name == "cycle":
        _require_params(name, params, 1)
        return gen_cycle(params[0])
    if name == "complete":
        _require_params(name, params, 1)
        return gen_complete(params[0])
    if name == "grid":
        _require_params(name, params, 2)
        return gen_grid(params[0], params[1])
    if name == "hypercube":
        _require_params(name, params, 1)
        return gen_hypercube(params[0])
    if name == "tree-random":
        _require_params(name, params, 1)
        return gen_tree_random(params[0], seed=seed)
    if name in ("pg", "projective"):
        _require_params(name, params, 1)
        return gen_projective_incidence(params[0])
    raise ValueError(f"unknown graph family {name!r}")


def _require_size(family: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ValueError(f"{family} size must be >= {minimum}, got {value}")


def _require_params(name: str, params: tuple[int, ...], count: int) -> None:
    if len(params) != count:
        raise ValueError(
            f"family {name!r} takes {count} parameter(s), got {len(params)}"
        )
