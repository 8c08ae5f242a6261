from __future__ import annotations

import random

import pytest

from slopeforge import graphutil as gu


def adj_of(edges, extra=()):
    verts = {v for e in edges for v in e} | set(extra)
    return gu.adjacency(verts, edges)


def k4():
    return adj_of([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])


def cycle(n):
    names = [f"v{i}" for i in range(n)]
    return adj_of([(names[i], names[(i + 1) % n]) for i in range(n)])


class TestConnectivity:
    def test_path_is_1(self):
        assert gu.vertex_connectivity(adj_of([("a", "b"), ("b", "c")])) == 1

    def test_c5_is_2(self):
        assert gu.vertex_connectivity(cycle(5)) == 2

    def test_k4_is_3(self):
        assert gu.vertex_connectivity(k4()) == 3

    def test_disconnected_is_0(self):
        assert gu.vertex_connectivity(adj_of([("a", "b")], extra=["z"])) == 0

    def test_k5_caps_at_4(self):
        edges = [(a, b) for a in "abcde" for b in "abcde" if a < b]
        assert gu.vertex_connectivity(adj_of(edges)) == 4

    def test_prism_is_3(self):
        edges = [
            ("a", "b"), ("b", "c"), ("c", "a"),
            ("x", "y"), ("y", "z"), ("z", "x"),
            ("a", "x"), ("b", "y"), ("c", "z"),
        ]
        assert gu.vertex_connectivity(adj_of(edges)) == 3


class TestBlocks:
    def test_bridges_of_two_triangles_joined_by_edge(self):
        edges = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "d")]
        assert gu.bridges(adj_of(edges)) == {frozenset(("c", "d"))}

    def test_two_edge_connected_components(self):
        edges = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "d")]
        comps = gu.two_edge_connected_components(adj_of(edges))
        assert sorted(sorted(c) for c in comps) == [["a", "b", "c"], ["d", "e", "f"]]

    def test_articulation(self):
        edges = [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]
        assert gu.articulation_points(adj_of(edges)) == {"c"}


class TestStNumbering:
    def check(self, adj, s, t):
        sigma = gu.st_numbering(adj, s, t)
        assert gu.verify_st_numbering(adj, s, t, sigma) == []

    def test_single_edge(self):
        sigma = gu.st_numbering(adj_of([("s", "t")]), "s", "t")
        assert sigma == {"s": 1, "t": 2}

    def test_c4(self):
        self.check(cycle(4), "v0", "v1")

    def test_k4_all_pairs(self):
        adj = k4()
        for s in "abcd":
            for t in "abcd":
                if s != t:
                    self.check(adj, s, t)

    def test_non_adjacent_terminals(self):
        self.check(cycle(6), "v0", "v3")

    def test_not_biconnected_rejected(self):
        with pytest.raises(ValueError):
            gu.st_numbering(adj_of([("a", "b"), ("b", "c")]), "a", "c")

    def test_random_biconnected(self):
        rng = random.Random(42)
        for trial in range(25):
            n = rng.randint(4, 12)
            base = cycle(n)
            names = sorted(base)
            for _ in range(rng.randint(1, n)):
                u, v = rng.sample(names, 2)
                if u != v:
                    base[u].add(v)
                    base[v].add(u)
            s, t = rng.sample(names, 2)
            self.check(base, s, t)


class TestPlanarity:
    def test_k4_planar(self):
        assert gu.is_planar(k4())

    def test_k5_not_planar(self):
        edges = [(a, b) for a in "abcde" for b in "abcde" if a < b]
        assert not gu.is_planar(adj_of(edges))

    def test_k33_not_planar(self):
        edges = [(a, b) for a in "abc" for b in "xyz"]
        assert not gu.is_planar(adj_of(edges))

    def test_k33_minus_edge_planar(self):
        edges = [(a, b) for a in "abc" for b in "xyz"]
        edges.remove(("a", "x"))
        assert gu.is_planar(adj_of(edges))

    def test_cube_planar(self):
        edges = [
            ("0", "1"), ("1", "2"), ("2", "3"), ("3", "0"),
            ("4", "5"), ("5", "6"), ("6", "7"), ("7", "4"),
            ("0", "4"), ("1", "5"), ("2", "6"), ("3", "7"),
        ]
        assert gu.is_planar(adj_of(edges))

    def test_petersen_not_planar(self):
        outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
        inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
        spokes = [(f"o{i}", f"i{i}") for i in range(5)]
        assert not gu.is_planar(adj_of(outer + inner + spokes))

    def test_wheel_and_bipyramid(self):
        hub = [("h", f"r{i}") for i in range(6)]
        rim = [(f"r{i}", f"r{(i + 1) % 6}") for i in range(6)]
        assert gu.is_planar(adj_of(hub + rim))
        second_hub = [("h2", f"r{i}") for i in range(6)]
        # The 6-gonal bipyramid is planar; adding the hub-hub edge exceeds
        # the planar edge bound (19 > 3*8-6) and must be rejected.
        assert gu.is_planar(adj_of(hub + rim + second_hub))
        assert not gu.is_planar(adj_of(hub + rim + second_hub + [("h", "h2")]))
