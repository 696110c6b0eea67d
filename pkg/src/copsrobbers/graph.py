"""Immutable simple undirected graphs and their metric queries.

Vertices are dense integers 0..n-1.  A Graph is frozen after construction
and safe to share across threads.  Distances, girth and the isometric-path
check are all BFS-based and exact; girth runs one BFS per vertex, which is
the right trade-off at desk scale.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted per-vertex neighbor lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neighbors[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in neighbors))

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbor list of {u} not sorted/unique")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric edge ({u}, {v})")

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


@dataclass(frozen=True)
class GraphMetrics:
    """Degree extremes, girth, exact edge density and connectivity data."""

    min_degree: int
    max_degree: int
    girth: int | float
    alpha: Fraction
    connected: bool
    component_ids: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return max(self.component_ids) + 1


def distances_from(g: Graph, source: int) -> list[int | float]:
    """BFS hop distances from source; unreachable vertices get INFINITE."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist: list[int | float] = [INFINITE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == INFINITE:
                dist[v] = du + 1
                queue.append(v)
    return dist


@lru_cache(maxsize=256)
def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or INFINITE for forests.

    One BFS per root; a non-tree edge (u, v) seen at root r witnesses a
    closed walk of length dist(u) + dist(v) + 1, which always contains a
    cycle at most that long, and the walk is tight when r lies on a
    shortest cycle.  Exact in O(n * e).
    """
    best: int | float = INFINITE
    dist = [0] * g.n
    parent = [0] * g.n
    for root in range(g.n):
        for i in range(g.n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # any cycle witnessed at or below u has length >= 2*dist[u]
            if 2 * dist[u] >= best:
                continue
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    cycle_len = dist[u] + dist[v] + 1
                    if cycle_len < best:
                        best = cycle_len
    return best


def component_labels(g: Graph) -> tuple[int, ...]:
    """Connected-component id per vertex, numbered by smallest member."""
    labels = [-1] * g.n
    next_id = 0
    for start in range(g.n):
        if labels[start] >= 0:
            continue
        labels[start] = next_id
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if labels[v] < 0:
                    labels[v] = next_id
                    queue.append(v)
        next_id += 1
    return tuple(labels)


def is_connected(g: Graph) -> bool:
    return max(component_labels(g)) == 0


def components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Induced subgraph per component plus its original vertex labels."""
    labels = component_labels(g)
    count = max(labels) + 1
    members: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(labels):
        members[c].append(v)
    result = []
    for verts in members:
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u in verts
            for v in g.adjacency[u]
            if u < v
        ]
        result.append((Graph.from_edges(len(verts), edges), verts))
    return result


def metrics(g: Graph) -> GraphMetrics:
    """All scalar invariants used by the bound formulas, in one pass."""
    degrees = [g.degree(v) for v in range(g.n)]
    labels = component_labels(g)
    return GraphMetrics(
        min_degree=min(degrees),
        max_degree=max(degrees),
        girth=girth(g),
        alpha=Fraction(g.edge_count, g.n),
        connected=max(labels) == 0,
        component_ids=labels,
    )


def check_isometric_path(g: Graph, path: Sequence[int]) -> bool:
    """True iff the path realizes graph distance between every vertex pair.

    The per-pair condition is deliberately stronger than just checking the
    endpoints: guarding needs every sub-segment to be geodesic.  Raises on
    inputs that are not simple paths at all.
    """
    if len(path) == 0:
        raise ValueError("empty path")
    if len(set(path)) != len(path):
        raise ValueError("path repeats a vertex")
    for v in path:
        if not 0 <= v < g.n:
            raise ValueError(f"path vertex {v} out of range")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"consecutive path vertices {a}, {b} not adjacent")
    for i, v in enumerate(path):
        dist = distances_from(g, v)
        for j in range(i + 1, len(path)):
            if dist[path[j]] != j - i:
                return False
    return True
