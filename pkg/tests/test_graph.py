"""Graph core: construction, distances, girth, metrics, isometric paths."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copsrobbers import (
    Graph,
    check_isometric_path,
    distances_from,
    gen_gnp,
    gen_named,
    girth,
    metrics,
)
from oracles import brute_girth, floyd_warshall

INF = math.inf


def small_random_graph(n: int, seed: int, p: float = 0.4) -> Graph:
    return gen_gnp(n, p, seed)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(3, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_empty_vertex_set(self):
        with pytest.raises(ValueError):
            Graph.from_edges(0, [])

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph.from_edges(4, [(2, 1), (0, 3), (1, 0)])
        assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
        assert g.edge_count == 3

    @given(st.integers(2, 12), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_generated_graphs_simple_and_symmetric(self, n, seed):
        g = small_random_graph(n, seed)
        for u in range(g.n):
            assert u not in g.adjacency[u]
            for v in g.adjacency[u]:
                assert u in g.adjacency[v]
        assert g.edge_count * 2 == sum(g.degree(v) for v in range(g.n))


class TestDistances:
    def test_cycle6(self):
        assert distances_from(gen_named("cycle", 6), 0) == [0, 1, 2, 3, 2, 1]

    def test_single_vertex(self):
        assert distances_from(Graph.from_edges(1, []), 0) == [0]

    def test_petersen_distance_profile(self):
        g = gen_named("petersen")
        for source in range(g.n):
            dist = distances_from(g, source)
            assert sorted(dist) == [0] + [1] * 3 + [2] * 6

    def test_source_out_of_range(self):
        with pytest.raises(ValueError):
            distances_from(gen_named("path", 3), 3)

    def test_unreachable_is_infinite(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        dist = distances_from(g, 0)
        assert dist[2] == INF and dist[3] == INF

    @given(st.integers(2, 10), st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_matches_floyd_warshall(self, n, seed):
        g = small_random_graph(n, seed)
        fw = floyd_warshall(g)
        for source in range(g.n):
            assert distances_from(g, source) == fw[source]

    @given(st.integers(3, 10), st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_triangle_inequality(self, n, seed):
        g = small_random_graph(n, seed, p=0.6)
        dist = [distances_from(g, v) for v in range(g.n)]
        for a in range(g.n):
            for b in range(g.n):
                for c in range(g.n):
                    assert dist[a][c] <= dist[a][b] + dist[b][c]


class TestGirth:
    def test_examples(self):
        assert girth(gen_named("cycle", 5)) == 5
        assert girth(gen_named("path", 7)) == INF
        assert girth(gen_named("tree-random", 12, seed=5)) == INF
        assert girth(gen_named("petersen")) == 5
        assert girth(gen_named("heawood")) == 6
        assert girth(gen_named("complete", 4)) == 3
        assert girth(gen_named("hypercube", 3)) == 4

    @given(st.integers(3, 9), st.integers(0, 10_000), st.sampled_from([0.2, 0.4, 0.7]))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, n, seed, p):
        g = small_random_graph(n, seed, p)
        assert girth(g) == brute_girth(g)


class TestMetrics:
    def test_petersen(self):
        m = metrics(gen_named("petersen"))
        assert m.min_degree == 3 and m.max_degree == 3
        assert m.girth == 5
        assert m.alpha == Fraction(15, 10)
        assert m.connected

    def test_k4(self):
        m = metrics(gen_named("complete", 4))
        assert m.min_degree == 3
        assert m.girth == 3
        assert m.alpha == Fraction(6, 4)

    def test_empty_graph(self):
        m = metrics(Graph.from_edges(5, []))
        assert m.girth == INF
        assert m.min_degree == 0
        assert not m.connected
        assert m.component_ids == (0, 1, 2, 3, 4)

    def test_alpha_is_exact_rational(self):
        m = metrics(gen_named("heawood"))
        assert m.alpha == Fraction(21, 14)
        assert isinstance(m.alpha, Fraction)


class TestIsometricPath:
    def test_cycle6_half_is_isometric(self):
        g = gen_named("cycle", 6)
        assert check_isometric_path(g, [0, 1, 2, 3]) is True

    def test_cycle6_long_arc_is_not(self):
        g = gen_named("cycle", 6)
        assert check_isometric_path(g, [0, 1, 2, 3, 4]) is False

    def test_grid_staircases(self):
        g = gen_named("grid", 3, 3)
        # vertices r*3+c; every monotone staircase is a shortest path
        assert check_isometric_path(g, [0, 1, 4, 5, 8])
        assert check_isometric_path(g, [0, 3, 4, 7, 8])
        assert check_isometric_path(g, [2, 1, 4, 3, 6])

    def test_single_vertex_path(self):
        assert check_isometric_path(gen_named("path", 3), [1])

    def test_rejects_nonadjacent(self):
        with pytest.raises(ValueError, match="not adjacent"):
            check_isometric_path(gen_named("cycle", 6), [0, 2])

    def test_rejects_repeats(self):
        with pytest.raises(ValueError, match="repeats"):
            check_isometric_path(gen_named("cycle", 6), [0, 1, 0])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            check_isometric_path(gen_named("cycle", 6), [])

    @given(st.integers(3, 9), st.integers(0, 10_000))
    @settings(max_examples=40, deadline=None)
    def test_isometric_implies_endpoint_distance(self, n, seed):
        g = small_random_graph(n, seed, p=0.5)
        # greedily grow shortest paths from vertex 0 and verify the claim
        dist = distances_from(g, 0)
        for target in range(g.n):
            if dist[target] == INF or target == 0:
                continue
            path = [target]
            while path[-1] != 0:
                prev = min(
                    v for v in g.adjacency[path[-1]] if dist[v] == dist[path[-1]] - 1
                )
                path.append(prev)
            path.reverse()
            if check_isometric_path(g, path):
                assert len(path) - 1 == dist[target]
