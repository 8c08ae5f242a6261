from __future__ import annotations

import pytest

from slopeforge import graphutil
from slopeforge.families import (
    chain_edges_3reg18,
    gen_2reg,
    gen_3reg18,
    gen_corpus,
    gen_crossed_k4,
    gen_fig_like,
    gen_k4_embedded,
    gen_maxdeg,
    gen_prism,
)
from slopeforge.model import connectivity, find_real_real_face


class TestK4:
    def test_counts(self):
        g = gen_k4_embedded()
        assert len(g.vertices) == 4
        assert len(g.edges) == 6

    def test_connectivity(self):
        assert connectivity(gen_k4_embedded()) == 3

    def test_outer_face_is_triangle(self):
        g = gen_k4_embedded()
        assert len(set(g.plane.outer_face().vertices())) == 3

    def test_no_crossings(self):
        assert gen_k4_embedded().crossings() == {}


class TestTwoRegular:
    @pytest.mark.parametrize("k", [1, 2, 3, 5, 10])
    def test_sizes(self, k):
        g = gen_2reg(k)
        assert len(g.vertices) == 2 * k + 2
        assert len(g.edges) == 2 * k + 2
        assert all(d == 2 for d in g.degrees().values())

    def test_k5_structure(self):
        g = gen_2reg(5)
        assert len(g.vertices) == 12 and len(g.edges) == 12

    def test_connected_2(self):
        assert connectivity(gen_2reg(3)) == 2

    def test_crossing_pattern(self):
        g = gen_2reg(3)
        assert len(g.crossings()) == 3
        pairs = sorted(tuple(sorted(p)) for p in g.crossings().values())
        assert pairs == [("ea1", "eb1"), ("ea2", "eb2"), ("ea3", "eb3")]


class TestThreeReg18:
    def test_regular_and_connected(self):
        g = gen_3reg18()
        assert all(d == 3 for d in g.degrees().values())
        assert connectivity(g, cap=3) == 3

    def test_chain_edges_present(self):
        g = gen_3reg18()
        have = {tuple(sorted(ab)) for ab in g.edges.values()}
        for a, b in chain_edges_3reg18():
            assert tuple(sorted((a, b))) in have, (a, b)

    def test_one_planarity(self):
        g = gen_3reg18()
        g.validate()
        assert len(g.crossings()) >= 3


class TestMaxDeg:
    def test_delta3_matches_base(self):
        g3 = gen_maxdeg(3)
        base = gen_3reg18()
        assert sorted(g3.vertices) == sorted(base.vertices)
        assert {tuple(sorted(ab)) for ab in g3.edges.values()} == {
            tuple(sorted(ab)) for ab in base.edges.values()
        }

    @pytest.mark.parametrize("delta", [3, 4, 5, 6, 7, 8])
    def test_degree_profile(self, delta):
        g = gen_maxdeg(delta)
        degs = g.degrees()
        specials = {f"{kind}{j}" for kind in "ace" for j in (1, 2, 3)}
        assert sum(1 for v, d in degs.items() if d == delta or delta == 3) >= 9
        for v, d in degs.items():
            assert d == (delta if v in specials else 3)

    @pytest.mark.parametrize("delta", [4, 6, 8])
    def test_added_edge_count(self, delta):
        base = gen_maxdeg(3)
        g = gen_maxdeg(delta)
        assert len(g.edges) - len(base.edges) == 9 * (delta - 3)

    def test_delta5_connectivity(self):
        assert connectivity(gen_maxdeg(5), cap=3) == 3

    def test_rejects_small_delta(self):
        with pytest.raises(ValueError):
            gen_maxdeg(2)


class TestCorpus:
    def test_deterministic(self):
        a = gen_corpus(seed=11, n_target=14, profile="cubic3con", count=3)
        b = gen_corpus(seed=11, n_target=14, profile="cubic3con", count=3)
        for g1, g2 in zip(a, b):
            assert g1.plane.edges == g2.plane.edges
            assert g1.plane.rotation == g2.plane.rotation

    def test_cubic3con_profile(self):
        for g in gen_corpus(seed=3, n_target=16, profile="cubic3con", count=4):
            assert g.is_cubic()
            assert connectivity(g, cap=3) == 3
            assert graphutil.vertex_connectivity(g.plane.adjacency(), cap=3) == 3
            find_real_real_face(g.plane)

    def test_target_size(self):
        for g in gen_corpus(seed=5, n_target=30, profile="cubic3con", count=2):
            assert 20 <= len(g.vertices) <= 36

    def test_subcubic_profile(self):
        for g in gen_corpus(seed=9, n_target=20, profile="subcubic", count=4):
            assert g.is_subcubic()
            assert graphutil.is_connected(g.abstract_adjacency())

    def test_subcubic_has_multiblock_instances(self):
        gs = gen_corpus(seed=2, n_target=24, profile="subcubic", count=6)
        best = 0
        for g in gs:
            comps = graphutil.two_edge_connected_components(g.abstract_adjacency())
            best = max(best, len(comps))
        assert best >= 3

    def test_fig_like(self):
        g = gen_fig_like()
        assert g.is_cubic()
        assert len(g.crossings()) >= 1

    def test_prism_and_crossed_k4(self):
        assert gen_prism().is_cubic()
        g = gen_crossed_k4()
        assert len(g.crossings()) == 1
