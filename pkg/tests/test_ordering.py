from __future__ import annotations

import pytest

from slopeforge import graphutil
from slopeforge.model import build_plane_graph
from slopeforge.ordering import (
    CanonicalOrdering,
    CanonicalSet,
    OrderingError,
    canonical_order,
    st_order,
    verify_canonical,
)

from test_model import k4_one_crossing, k4_plane


def prism_plane():
    return build_plane_graph(
        real_vertices=["a", "b", "c", "x", "y", "z"],
        dummy_vertices=[],
        edges={
            "ab": ("a", "b"), "ac": ("a", "c"), "bc": ("b", "c"),
            "xy": ("x", "y"), "xz": ("x", "z"), "yz": ("y", "z"),
            "ax": ("a", "x"), "by": ("b", "y"), "cz": ("c", "z"),
        },
        rotation={
            "a": ["ab", "ac", "ax"],
            "b": ["bc", "ab", "by"],
            "c": ["cz", "ac", "bc"],
            "x": ["xy", "ax", "xz"],
            "y": ["yz", "by", "xy"],
            "z": ["xz", "cz", "yz"],
        },
        fragment_of={},
        outer_dart=("xy", "y"),
    )


class TestCanonicalOrder:
    def test_k4(self):
        plane = k4_plane()
        delta = canonical_order(plane, "a", "b")
        ok, problems = verify_canonical(plane, delta)
        assert ok, problems
        assert delta.sets[0].vertices == ["a", "b"]
        assert len(delta.vertex_order()) == 4

    def test_prism(self):
        plane = prism_plane()
        delta = canonical_order(plane, "x", "y")
        ok, problems = verify_canonical(plane, delta)
        assert ok, problems
        assert len(delta.sets) >= 3

    def test_planarized_crossed_k4(self):
        plane = k4_one_crossing()
        delta = canonical_order(plane, "1", "2")
        ok, problems = verify_canonical(plane, delta)
        assert ok, problems
        assert sorted(delta.vertex_order()) == sorted(plane.vertices)

    def test_deterministic(self):
        plane = prism_plane()
        d1 = canonical_order(plane, "x", "y")
        d2 = canonical_order(plane, "x", "y")
        assert [s.vertices for s in d1.sets] == [s.vertices for s in d2.sets]

    def test_requires_outer_edge(self):
        plane = prism_plane()
        with pytest.raises(OrderingError):
            canonical_order(plane, "a", "b")  # inner edge

    def test_requires_3_connectivity(self):
        plane = build_plane_graph(
            real_vertices=["a", "b", "c", "d"],
            dummy_vertices=[],
            edges={"ab": ("a", "b"), "bc": ("b", "c"), "cd": ("c", "d"), "da": ("d", "a")},
            rotation={"a": ["ab", "da"], "b": ["bc", "ab"], "c": ["cd", "bc"], "d": ["da", "cd"]},
            fragment_of={},
            outer_dart=("ab", "b"),
        )
        with pytest.raises(OrderingError):
            canonical_order(plane, "a", "b")


class TestVerifyCanonical:
    def test_accepts_builder_output(self):
        plane = k4_plane()
        delta = canonical_order(plane, "a", "b")
        ok, problems = verify_canonical(plane, delta)
        assert ok and not problems

    def test_rejects_swapped_sets(self):
        plane = prism_plane()
        delta = canonical_order(plane, "x", "y")
        if len(delta.sets) >= 4:
            broken = CanonicalOrdering(
                sets=[delta.sets[0]] + [delta.sets[2], delta.sets[1]] + delta.sets[3:],
                v1="x",
                v2="y",
            )
            ok, problems = verify_canonical(plane, broken)
            assert not ok

    def test_rejects_singleton_without_successor(self):
        plane = k4_plane()
        delta = canonical_order(plane, "a", "b")
        # Move the last singleton to the middle: it then has no successor.
        if len(delta.sets) >= 3:
            sets = [delta.sets[0], delta.sets[-1]] + delta.sets[1:-1]
            broken = CanonicalOrdering(sets=sets, v1="a", v2="b")
            ok, problems = verify_canonical(plane, broken)
            assert not ok
            assert any("(v" in p or "(iii)" in p or "(iv)" in p for p in problems)


class TestStOrder:
    def test_single_edge(self):
        adj = graphutil.adjacency(["s", "t"], [("s", "t")])
        st = st_order(adj, "s", "t")
        assert st.sigma == {"s": 1, "t": 2}

    def test_c4_ranks(self):
        adj = graphutil.adjacency(["s", "a", "t", "b"], [("s", "a"), ("a", "t"), ("t", "b"), ("b", "s")])
        st = st_order(adj, "s", "t")
        assert st.sigma["s"] == 1 and st.sigma["t"] == 4
        assert sorted([st.sigma["a"], st.sigma["b"]]) == [2, 3]

    def test_k4_interior_has_in_and_out(self):
        edges = [(a, b) for a in "abcd" for b in "abcd" if a < b]
        adj = graphutil.adjacency("abcd", edges)
        st = st_order(adj, "a", "d")
        for v in "bc":
            assert any(st.sigma[w] < st.sigma[v] for w in adj[v])
            assert any(st.sigma[w] > st.sigma[v] for w in adj[v])
