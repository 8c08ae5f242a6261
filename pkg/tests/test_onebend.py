from __future__ import annotations

from fractions import Fraction

import pytest

from slopeforge.families import (
    gen_corpus,
    gen_crossed_k4,
    gen_fig_like,
    gen_k4_embedded,
    gen_prism,
)
from slopeforge.geometry import Point, SlopeKind
from slopeforge.model import find_real_real_face
from slopeforge.onebend import (
    Gamma,
    OneBendDrawer,
    OneBendError,
    check_gamma,
    draw_onebend,
    stretch,
)
from slopeforge.ordering import canonical_order
from slopeforge.reembed import normalize_embedding
from slopeforge.verify import validate

F = Fraction


def build_drawer(g, check=True):
    norm = normalize_embedding(g)
    plane = norm.plane.copy()
    face, (tail, head), _ = find_real_real_face(plane)
    if set(face.darts) != set(plane.outer_face().darts):
        plane = plane.with_outer(face.darts[0])
    delta = canonical_order(plane, head, tail)
    return OneBendDrawer(plane, delta, check_steps=check)


class TestBase:
    def test_base_is_valid(self):
        drawer = build_drawer(gen_prism())
        drawer._draw_base(drawer.delta.sets[1])
        assert check_gamma(drawer.g) == []

    def test_base_flat_on_the_base_line(self):
        drawer = build_drawer(gen_prism())
        drawer._draw_base(drawer.delta.sets[1])
        g = drawer.g
        for v in drawer.delta.sets[1].vertices:
            assert g.pos[v].y == 0

    def test_base_low_point_is_lowest(self):
        drawer = build_drawer(gen_k4_embedded())
        drawer._draw_base(drawer.delta.sets[1])
        g = drawer.g
        base_edge = [e for e in g.polylines if len(g.polylines[e]) == 3][0]
        low = g.polylines[base_edge][1]
        assert all(low.y < p.y or p == low for p in g.pos.values() if p != low)


class TestStretch:
    def test_monotone_rightward(self):
        drawer = build_drawer(gen_prism(), check=False)
        drawer._draw_base(drawer.delta.sets[1])
        for i in range(2, len(drawer.delta.sets) - 1):
            drawer._add_set(drawer.delta.sets[i])
        g = drawer.g
        before = dict(g.pos)
        anchor = g.contour[1]
        stretch(g, anchor, F(3))
        for v, p in g.pos.items():
            assert p.x >= before[v].x, "stretching moved a point leftward"
            assert p.y == before[v].y or v in (g.v1, g.v2)

    def test_invariants_survive_stretch(self):
        drawer = build_drawer(gen_prism(), check=False)
        drawer._draw_base(drawer.delta.sets[1])
        for i in range(2, len(drawer.delta.sets) - 1):
            drawer._add_set(drawer.delta.sets[i])
        g = drawer.g
        stretch(g, g.contour[1], F(5))
        assert check_gamma(g) == []


class TestPipeline:
    @pytest.mark.parametrize(
        "gen", [gen_k4_embedded, gen_prism, gen_crossed_k4, gen_fig_like]
    )
    def test_fixture_graphs(self, gen):
        d = draw_onebend(gen())
        report = validate(d, "ONEBEND")
        assert report.passed, report.violations
        assert report.slope_set <= {
            SlopeKind.DEG0, SlopeKind.DEG45, SlopeKind.DEG90, SlopeKind.DEG135
        }
        assert report.max_bends <= 1
        assert report.min_vertex_angle >= 1
        assert report.embedding_preserved

    def test_crossing_resolution_exact(self):
        d = draw_onebend(gen_crossed_k4())
        report = validate(d, "ONEBEND")
        assert report.min_crossing_angle is not None
        assert report.min_crossing_angle >= 1

    def test_per_step_checker_runs(self):
        drawer = build_drawer(gen_fig_like())
        drawer.run()
        assert len(drawer.trace) >= 3

    def test_rejects_non_cubic(self):
        from slopeforge.families import gen_2reg

        with pytest.raises(OneBendError):
            draw_onebend(gen_2reg(2))

    def test_corpus_graphs(self):
        for g in gen_corpus(seed=77, n_target=14, profile="cubic3con", count=3):
            d = draw_onebend(g, check_steps=True)
            report = validate(d, "ONEBEND")
            assert report.passed, report.violations

    def test_deterministic(self):
        g = gen_fig_like()
        d1 = draw_onebend(g)
        d2 = draw_onebend(g)
        assert d1.positions == d2.positions
        assert d1.polylines == d2.polylines
