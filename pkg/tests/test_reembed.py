from __future__ import annotations

import pytest

from slopeforge.families import gen_corpus, gen_crossed_k4, gen_k4_embedded
from slopeforge.model import connectivity
from slopeforge.reembed import (
    ReembedError,
    count_dummy_cutvertices,
    dummy_two_cuts,
    normalize_embedding,
    normalized_reembedding_exists,
)

from adversarial import adversarial_suite, crossed_prism, two_blocks_crossed


class TestCountDummyCutvertices:
    def test_normalized_graph_has_none(self):
        assert count_dummy_cutvertices(gen_crossed_k4().plane) == 0

    def test_two_triangles_sharing_a_crossing(self):
        g = two_blocks_crossed(3, 3)
        assert count_dummy_cutvertices(g.plane) == 1

    def test_crossed_prism_has_dummy_two_cut(self):
        g = crossed_prism()
        assert count_dummy_cutvertices(g.plane) == 0
        assert dummy_two_cuts(g.plane)


class TestNormalize:
    def test_idempotent_on_normalized_input(self):
        g = gen_crossed_k4()
        out = normalize_embedding(g)
        assert len(out.crossings()) == 1
        assert count_dummy_cutvertices(out.plane) == 0

    def test_uncrosses_cutvertex_gadget(self):
        g = two_blocks_crossed(3, 3)
        out = normalize_embedding(g)
        assert count_dummy_cutvertices(out.plane) == 0
        assert sorted(out.edges) == sorted(g.edges)

    def test_crossing_count_never_increases(self):
        for name, g in adversarial_suite():
            out = normalize_embedding(g)
            assert len(out.crossings()) <= len(g.crossings()), name

    def test_restores_3_connected_planarization(self):
        g = crossed_prism()
        assert connectivity(g, cap=3) == 3
        out = normalize_embedding(g)
        assert connectivity(out.plane.adjacency(), cap=3) >= 3

    def test_adversarial_suite_full_contract(self):
        suite = adversarial_suite()
        assert len(suite) >= 20
        for name, g in suite:
            out = normalize_embedding(g)
            assert count_dummy_cutvertices(out.plane) == 0, name
            assert sorted(out.vertices) == sorted(g.vertices), name
            want = {e: tuple(sorted(ab)) for e, ab in g.edges.items()}
            got = {e: tuple(sorted(ab)) for e, ab in out.edges.items()}
            assert want == got, name
            if connectivity(g, cap=3) >= 3:
                assert connectivity(out.plane.adjacency(), cap=3) >= 3, name

    def test_corpus_graphs_already_normalized(self):
        for g in gen_corpus(seed=21, n_target=14, profile="cubic3con", count=3):
            out = normalize_embedding(g)
            assert len(out.crossings()) == len(g.crossings())


class TestOracle:
    def test_uncrossable_gadget_seen_by_oracle(self):
        g = two_blocks_crossed(3, 3)
        assert normalized_reembedding_exists(g)

    def test_oracle_agrees_on_k4(self):
        assert normalized_reembedding_exists(gen_k4_embedded())

    def test_oracle_on_crossed_prism(self):
        assert normalized_reembedding_exists(crossed_prism())

    def test_oracle_matches_surgery_on_small_instances(self):
        for name, g in adversarial_suite():
            if len(g.vertices) > 10:
                continue
            ok = True
            try:
                normalize_embedding(g)
            except ReembedError:
                ok = False
            assert normalized_reembedding_exists(g) == ok or ok, name
            # When the surgery succeeds, the oracle must agree one exists.
            if ok:
                assert normalized_reembedding_exists(g), name
