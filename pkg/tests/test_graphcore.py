"""Graph core: distances, powers, diameter, exact clique search."""

from __future__ import annotations

import json
from itertools import combinations

import pytest

from conftest import brute_force_clique_number
from nourishing.graphcore import (
    INF,
    Graph,
    all_pairs_distance,
    clique_number,
    diameter,
    is_complete,
    max_clique,
    power,
)


def path_graph(m: int) -> Graph:
    return Graph(m + 1, [(i, i + 1) for i in range(m)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


class TestGraph:
    def test_rejects_loops_and_bad_vertices(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(0, [])

    def test_parallel_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0)])
        assert len(g.edges) == 1

    def test_json_round_trip(self):
        g = cycle_graph(5)
        assert Graph.from_json(json.loads(g.to_json_str())) == g

    def test_dot_output(self):
        dot = path_graph(1).to_dot()
        assert dot.startswith("graph G {")
        assert "0 -- 1;" in dot

    def test_induced_subgraph(self):
        g = cycle_graph(5)
        sub = g.induced_subgraph([0, 1, 3])
        assert sub.n == 3
        assert sub.edges == frozenset({(0, 1)})


class TestDistances:
    def test_path(self):
        d = all_pairs_distance(path_graph(2))
        assert d[0][2] == 2

    def test_complete(self):
        d = all_pairs_distance(complete_graph(4))
        assert all(d[u][v] == 1 for u in range(4) for v in range(4) if u != v)

    def test_cycle_antipode(self):
        assert all_pairs_distance(cycle_graph(6))[0][3] == 3

    def test_disconnected_is_inf(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert all_pairs_distance(g)[0][2] == INF

    def test_symmetric_zero_diagonal(self):
        g = cycle_graph(7)
        d = all_pairs_distance(g)
        for u in range(7):
            assert d[u][u] == 0
            for v in range(7):
                assert d[u][v] == d[v][u]


class TestDiameter:
    def test_complete(self):
        assert diameter(complete_graph(5)) == 1

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycle(self, n):
        assert diameter(cycle_graph(n)) == n // 2

    @pytest.mark.parametrize("m", range(1, 8))
    def test_path(self, m):
        assert diameter(path_graph(m)) == m

    def test_single_vertex(self):
        assert diameter(Graph(1, [])) == 0

    def test_disconnected(self):
        assert diameter(Graph(3, [(0, 1)])) == INF


class TestPower:
    def test_identity_at_one(self):
        g = cycle_graph(5)
        assert power(g, 1) == g

    def test_square_of_c4_is_complete(self):
        assert power(cycle_graph(4), 2) == complete_graph(4)

    def test_path_square(self):
        g = power(path_graph(4), 2)
        expected = {(u, v) for u in range(5) for v in range(u + 1, 5) if v - u <= 2}
        assert g.edges == frozenset(expected)

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            power(cycle_graph(4), 0)

    @pytest.mark.parametrize("n", [5, 6, 8])
    def test_monotone_in_r(self, n):
        g = cycle_graph(n)
        for r in range(1, n):
            assert power(g, r).edges <= power(g, r + 1).edges

    @pytest.mark.parametrize("n", [4, 6, 7])
    def test_diameter_power_complete(self, n):
        g = cycle_graph(n)
        assert is_complete(power(g, int(diameter(g))))


class TestClique:
    def test_triangle_free_with_edge(self):
        assert clique_number(cycle_graph(6)) == 2

    def test_complete(self):
        assert clique_number(complete_graph(7)) == 7

    def test_squared_hexagon(self):
        assert clique_number(power(cycle_graph(6), 2)) == 3

    def test_witness_is_maximal_clique(self):
        g = power(cycle_graph(8), 2)
        witness = max_clique(g)
        for u, v in combinations(witness, 2):
            assert g.has_edge(u, v)
        outside = set(range(g.n)) - set(witness)
        for w in outside:
            assert not all(g.has_edge(w, v) for v in witness)

    def test_matches_brute_force_on_assorted_graphs(self):
        graphs = [
            cycle_graph(7),
            power(cycle_graph(9), 3),
            path_graph(6),
            Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]),
            Graph(5, []),
        ]
        for g in graphs:
            assert clique_number(g) == brute_force_clique_number(g)

    def test_nondecreasing_in_r(self):
        g = cycle_graph(9)
        values = [clique_number(power(g, r)) for r in range(1, 6)]
        assert values == sorted(values)
