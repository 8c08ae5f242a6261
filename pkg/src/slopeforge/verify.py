"""Geometric validator: measure a drawing and check it against a profile.

The validator never looks inside a drawer; it re-derives everything from
the exact coordinates.  All checks are sign tests on rationals, so claims
like "crossing resolution exactly pi/2" are decided exactly, never with
an epsilon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .drawing import PolylineDrawing
from .geometry import (
    Direction,
    IntersectKind,
    Point,
    Segment,
    SlopeKind,
    CANONICAL_SLOPES,
    intersect,
    min_angle_eighths_lower_bound,
    slope_of,
    sort_directions_ccw,
)
from .model import DUMMY_PREFIX, EmbeddedGraph, EmbeddingError, PlaneGraph

PROFILES = ("ONEBEND", "TWOBEND", "STRAIGHT")


@dataclass
class ValidationReport:
    profile: str
    slope_set: Set[SlopeKind]
    slope_count: int
    max_bends: int
    min_vertex_angle: Optional[int]  # eighths of pi, None when not a multiple
    min_crossing_angle: Optional[int]
    one_planar: bool
    embedding_preserved: bool
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class DrawingError(Exception):
    """Raised for structurally broken or non-simple drawings."""


# ---------------------------------------------------------------------------
# Pairwise segment analysis
# ---------------------------------------------------------------------------


def _pairwise_hits(d: PolylineDrawing):
    """All non-disjoint segment pairs, with a bbox sweep as prefilter."""
    segs = d.all_segments()
    order = sorted(range(len(segs)), key=lambda i: segs[i][2].bbox()[0])
    active: List[int] = []
    hits = []
    for idx in order:
        e, si, seg = segs[idx]
        x_lo = seg.bbox()[0]
        active = [j for j in active if segs[j][2].bbox()[2] >= x_lo]
        for j in active:
            e2, sj, seg2 = segs[j]
            b1, b2 = seg.bbox(), seg2.bbox()
            if b1[3] < b2[1] or b2[3] < b1[1]:
                continue
            res = intersect(seg, seg2)
            if res.kind is not IntersectKind.DISJOINT:
                hits.append(((e, si, seg), (e2, sj, seg2), res))
        active.append(idx)
    return hits


@dataclass
class Interactions:
    violations: List[str]
    crossings: Dict[Point, List[Tuple[str, int, Segment]]]
    simple: bool
    one_planar: bool


def _corner_crossing(d: PolylineDrawing, corner_edge: str, pt: Point, other_seg: Segment) -> bool:
    """A polyline corner lying inside another edge's segment is a genuine
    crossing when the two corner segments leave on opposite sides."""
    from .geometry import orient

    pts = d.polylines[corner_edge]
    if pt not in pts[1:-1]:
        return False
    i = pts.index(pt)
    s_prev = orient(other_seg.a, other_seg.b, pts[i - 1])
    s_next = orient(other_seg.a, other_seg.b, pts[i + 1])
    return s_prev * s_next < 0


def _corner_corner_crossing(d: PolylineDrawing, e1: str, e2: str, pt: Point) -> bool:
    """Both edges bend exactly at pt: they cross iff their four rays
    alternate around the point."""
    for e in (e1, e2):
        if pt not in d.polylines[e][1:-1]:
            return False
    d1a, d1b = _edge_dirs_at(d, e1, pt)
    d2a, d2b = _edge_dirs_at(d, e2, pt)
    labeled = [(d1a, 1), (d1b, 1), (d2a, 2), (d2b, 2)]
    import functools

    from .geometry import angular_compare

    labeled.sort(key=functools.cmp_to_key(lambda p, q: angular_compare(p[0], q[0])))
    owners = [o for _, o in labeled]
    return owners in ([1, 2, 1, 2], [2, 1, 2, 1])


def _analyze(d: PolylineDrawing) -> Interactions:
    """Classify all segment interactions of a drawing."""
    violations: List[str] = []
    crossings: Dict[Point, List[Tuple[str, int, Segment]]] = {}
    for (e1, i1, s1), (e2, i2, s2), res in _pairwise_hits(d):
        if e1 == e2:
            if abs(i1 - i2) == 1:
                if res.kind is not IntersectKind.SHARED_ENDPOINT:
                    violations.append(f"edge {e1} self-intersects near segment {min(i1, i2)}")
            else:
                violations.append(f"edge {e1} self-intersects (segments {i1}, {i2})")
            continue
        if res.kind is IntersectKind.OVERLAP:
            violations.append(f"edges {e1} and {e2} overlap")
        elif res.kind is IntersectKind.TOUCH:
            pt = res.point
            # A transversal crossing where one edge has its bend exactly at
            # the crossing point is a legal proper intersection.
            if _corner_crossing(d, e1, pt, s2) or _corner_crossing(d, e2, pt, s1):
                entry = crossings.setdefault(pt, [])
                for item in ((e1, i1, s1), (e2, i2, s2)):
                    if item not in entry:
                        entry.append(item)
            else:
                violations.append(f"edges {e1} and {e2} touch at {pt} (non-simple)")
        elif res.kind is IntersectKind.SHARED_ENDPOINT:
            a1, b1 = d.graph.edges[e1]
            a2, b2 = d.graph.edges[e2]
            shared = {a1, b1} & {a2, b2}
            pt = res.point
            if any(d.positions.get(v) == pt for v in shared):
                pass
            elif _corner_corner_crossing(d, e1, e2, pt):
                entry = crossings.setdefault(pt, [])
                for item in ((e1, i1, s1), (e2, i2, s2)):
                    if item not in entry:
                        entry.append(item)
            else:
                violations.append(
                    f"edges {e1} and {e2} meet at {pt}, not a common endpoint (non-simple)"
                )
        elif res.kind is IntersectKind.PROPER_CROSSING:
            pt = res.point
            entry = crossings.setdefault(pt, [])
            for item in ((e1, i1, s1), (e2, i2, s2)):
                if item not in entry:
                    entry.append(item)
    simple = not violations
    one_planar = True
    for pt, items in sorted(crossings.items()):
        edges_here = sorted({e for e, _, _ in items})
        if len(edges_here) > 2:
            violations.append(f"more than two edges cross at {pt}")
            simple = False
    per_pair: Dict[Tuple[str, str], List[Point]] = {}
    for pt, items in crossings.items():
        edges_here = sorted({e for e, _, _ in items})
        if len(edges_here) == 2:
            per_pair.setdefault((edges_here[0], edges_here[1]), []).append(pt)
    for (e1, e2), pts in sorted(per_pair.items()):
        if len(pts) > 1:
            violations.append(f"edges {e1} and {e2} cross {len(pts)} times")
            simple = False
        a1, b1 = d.graph.edges[e1]
        a2, b2 = d.graph.edges[e2]
        if {a1, b1} & {a2, b2}:
            violations.append(f"adjacent edges {e1} and {e2} cross (share two points)")
            simple = False
    per_edge: Dict[str, int] = {}
    for (e1, e2), pts in per_pair.items():
        per_edge[e1] = per_edge.get(e1, 0) + len(pts)
        per_edge[e2] = per_edge.get(e2, 0) + len(pts)
    for e, k in sorted(per_edge.items()):
        if k > 1:
            violations.append(f"edge {e} is crossed {k} times (1-planarity violated)")
            one_planar = False
    one_planar = one_planar and simple
    return Interactions(violations, crossings, simple, one_planar)


# ---------------------------------------------------------------------------
# Measurements
# ---------------------------------------------------------------------------


def count_slopes(d: PolylineDrawing) -> int:
    return len(slope_set(d))


def slope_set(d: PolylineDrawing) -> Set[SlopeKind]:
    kinds: Set[SlopeKind] = set()
    other_vecs: Set[Tuple[int, int]] = set()
    for _, _, seg in d.all_segments():
        s = slope_of(seg)
        if s.kind is SlopeKind.OTHER:
            other_vecs.add(s.vec)
        kinds.add(s.kind)
    return kinds


def distinct_slope_count(d: PolylineDrawing) -> int:
    vecs = {slope_of(seg).vec for _, _, seg in d.all_segments()}
    return len(vecs)


def max_bends(d: PolylineDrawing) -> int:
    worst = 0
    for e in d.polylines:
        pts = d.polylines[e]
        bends = 0
        for i in range(1, len(pts) - 1):
            d1 = (pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y)
            d2 = (pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y)
            if d1[0] * d2[1] - d1[1] * d2[0] != 0 or (d1[0] * d2[0] + d1[1] * d2[1]) < 0:
                bends += 1
        worst = max(worst, bends)
    return worst


def vertex_direction_sets(d: PolylineDrawing) -> Dict[str, List[Direction]]:
    dirs: Dict[str, List[Direction]] = {v: [] for v in d.graph.vertices}
    for e, (a, b) in d.graph.edges.items():
        pts = d.polylines[e]
        if pts[0] != d.positions[a]:
            pts = list(reversed(pts))
        dirs[a].append((pts[1].x - pts[0].x, pts[1].y - pts[0].y))
        dirs[b].append((pts[-2].x - pts[-1].x, pts[-2].y - pts[-1].y))
    return dirs


def min_vertex_resolution(d: PolylineDrawing) -> Optional[int]:
    """Largest k with every vertex angle >= k*pi/4; None if some angle is 0."""
    best = 4
    for v, dirs in sorted(vertex_direction_sets(d).items()):
        if len(dirs) < 2:
            continue
        k = min_angle_eighths_lower_bound(dirs)
        if k is None:
            return None
        best = min(best, k)
    return best


def crossing_directions(d: PolylineDrawing, pt: Point, items) -> List[Direction]:
    """The four ray directions of the two edges at a crossing point."""
    dirs: List[Direction] = []
    for e in sorted({e for e, _, _ in items}):
        dirs.extend(_edge_dirs_at(d, e, pt))
    return dirs


def _edge_dirs_at(d: PolylineDrawing, e: str, pt: Point) -> List[Direction]:
    pts = d.polylines[e]
    if pt in pts[1:-1]:
        i = pts.index(pt)
        return [
            (pts[i - 1].x - pt.x, pts[i - 1].y - pt.y),
            (pts[i + 1].x - pt.x, pts[i + 1].y - pt.y),
        ]
    from .geometry import on_segment

    for i in range(len(pts) - 1):
        seg = Segment(pts[i], pts[i + 1])
        if on_segment(pt, seg):
            return [
                (seg.a.x - pt.x, seg.a.y - pt.y),
                (seg.b.x - pt.x, seg.b.y - pt.y),
            ]
    raise DrawingError(f"crossing point {pt} not on edge {e}")


def min_crossing_resolution(d: PolylineDrawing, crossings=None) -> Optional[int]:
    if crossings is None:
        crossings = _analyze(d).crossings
    best = 4
    for pt, items in sorted(crossings.items()):
        dirs = crossing_directions(d, pt, items)
        k = min_angle_eighths_lower_bound(dirs)
        if k is None:
            return None
        best = min(best, k)
    return best


# ---------------------------------------------------------------------------
# Embedding extraction
# ---------------------------------------------------------------------------


def embedding_of(d: PolylineDrawing) -> EmbeddedGraph:
    """The 1-plane embedding induced by the geometry, computed exactly.

    Raises DrawingError for non-simple drawings (overlaps, touches, double
    crossings), identifying an offending pair.
    """
    structural = d.check_structure()
    if structural:
        raise DrawingError("; ".join(structural))
    inter = _analyze(d)
    if inter.violations:
        raise DrawingError(inter.violations[0])
    crossings = inter.crossings

    # Crossing points per edge (a corner crossing reports one point twice).
    per_edge: Dict[str, Set[Point]] = {e: set() for e in d.graph.edges}
    pair_of: Dict[Point, Tuple[str, str]] = {}
    for pt, items in crossings.items():
        edges_here = sorted({e for e, _, _ in items})
        pair_of[pt] = (edges_here[0], edges_here[1])
        for e, _, _ in items:
            per_edge[e].add(pt)

    dummy_id: Dict[Point, str] = {}
    for i, pt in enumerate(sorted(pair_of)):
        dummy_id[pt] = f"{DUMMY_PREFIX}{i}"

    edges: Dict[str, Tuple[str, str]] = {}
    fragment_of: Dict[str, str] = {}
    endpoint_dirs: Dict[str, List[Tuple[Direction, str]]] = {v: [] for v in d.graph.vertices}
    dummy_dirs: Dict[str, List[Tuple[Direction, str]]] = {}
    positions: Dict[str, Point] = dict(d.positions)

    for e, (a, b) in sorted(d.graph.edges.items()):
        pts = d.polylines[e]
        if pts[0] != d.positions[a]:
            pts = list(reversed(pts))
        marks = sorted(per_edge[e])
        if not marks:
            edges[e] = (a, b)
            endpoint_dirs[a].append(((pts[1].x - pts[0].x, pts[1].y - pts[0].y), e))
            endpoint_dirs[b].append(((pts[-2].x - pts[-1].x, pts[-2].y - pts[-1].y), e))
            continue
        # 1-planarity was already enforced: exactly one crossing on e.
        pt = marks[0]
        x = dummy_id[pt]
        ea, eb = f"{e}$a", f"{e}$b"
        edges[ea] = (a, x)
        edges[eb] = (x, b)
        fragment_of[ea] = e
        fragment_of[eb] = e
        positions[x] = pt
        endpoint_dirs[a].append(((pts[1].x - pts[0].x, pts[1].y - pts[0].y), ea))
        endpoint_dirs[b].append(((pts[-2].x - pts[-1].x, pts[-2].y - pts[-1].y), eb))
        toward_a, toward_b = _frag_dirs_at(pts, pt)
        dummy_dirs.setdefault(x, [])
        dummy_dirs[x].append((toward_a, ea))
        dummy_dirs[x].append((toward_b, eb))

    rotation: Dict[str, List[str]] = {}
    for v, dir_edges in list(endpoint_dirs.items()) + list(dummy_dirs.items()):
        ordered = _sort_edge_dirs_ccw(dir_edges)
        rotation[v] = [e for _, e in ordered]

    plane = PlaneGraph(
        vertices=list(d.graph.vertices) + sorted(dummy_dirs),
        real=set(d.graph.vertices),
        edges=edges,
        rotation=rotation,
        fragment_of=fragment_of,
    )
    plane.outer_darts = tuple(_outer_face_darts(plane, positions, d))
    plane.validate()
    return EmbeddedGraph.from_plane(plane)


def _frag_dirs_at(pts: List[Point], pt: Point) -> Tuple[Direction, Direction]:
    """Local directions (toward the polyline start side, toward the end side)
    at a crossing point, which may be a bend of the polyline."""
    if pt in pts[1:-1]:
        i = pts.index(pt)
        return (
            (pts[i - 1].x - pt.x, pts[i - 1].y - pt.y),
            (pts[i + 1].x - pt.x, pts[i + 1].y - pt.y),
        )
    from .geometry import on_segment

    for i in range(len(pts) - 1):
        if pts[i] != pt and pts[i + 1] != pt and on_segment(pt, Segment(pts[i], pts[i + 1])):
            return (
                (pts[i].x - pt.x, pts[i].y - pt.y),
                (pts[i + 1].x - pt.x, pts[i + 1].y - pt.y),
            )
    raise DrawingError(f"crossing point {pt} not interior to its edge")


def _sort_edge_dirs_ccw(dir_edges: Sequence[Tuple[Direction, str]]):
    import functools

    from .geometry import angular_compare

    return sorted(dir_edges, key=functools.cmp_to_key(lambda p, q: angular_compare(p[0], q[0])))


def _plane_polylines(plane: PlaneGraph, positions: Dict[str, Point], d: PolylineDrawing) -> Dict[str, List[Point]]:
    """Polyline per planarization edge, oriented from its first endpoint."""
    out: Dict[str, List[Point]] = {}
    for e, (va, vb) in plane.edges.items():
        orig = plane.original_edge_of(e)
        pts = list(d.polylines[orig])
        a_id, b_id = d.graph.edges[orig]
        if pts[0] != d.positions[a_id]:
            pts = list(reversed(pts))
        pa, pb = positions[va], positions[vb]
        if e == orig:
            piece = pts
        else:
            # Fragment: cut the original polyline at the crossing point.
            cut = pa if va not in plane.real else pb
            idx, frac_pt = _locate_on_polyline(pts, cut)
            first = pts[: idx + 1] + [cut]
            second = [cut] + pts[idx + 1 :]
            piece = first if (first[0] == pa or first[0] == pb) else second
        if piece[0] != pa:
            piece = list(reversed(piece))
        out[e] = _dedup(piece)
    return out


def _locate_on_polyline(pts: List[Point], p: Point) -> Tuple[int, Point]:
    from .geometry import on_segment

    for i in range(len(pts) - 1):
        if on_segment(p, Segment(pts[i], pts[i + 1])):
            return i, p
    raise DrawingError(f"point {p} not on polyline")


def _dedup(pts: List[Point]) -> List[Point]:
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _outer_face_darts(plane: PlaneGraph, positions: Dict[str, Point], d: PolylineDrawing):
    """Darts of the unbounded face, located via the bottommost drawing point."""
    pieces = _plane_polylines(plane, positions, d)
    best: Optional[Tuple[Fraction, Fraction]] = None
    best_kind: Optional[Tuple] = None  # ("vertex", v) or ("bend", edge, index)
    for v in plane.vertices:
        key = (positions[v].y, positions[v].x)
        if best is None or key < best:
            best, best_kind = key, ("vertex", v)
    for e in sorted(pieces):
        for i, p in enumerate(pieces[e][1:-1], start=1):
            key = (p.y, p.x)
            if best is None or key < best:
                best, best_kind = key, ("bend", e, i)
    assert best_kind is not None
    if best_kind[0] == "vertex":
        v = best_kind[1]
        dirs = []
        for e in plane.rotation[v]:
            pts = pieces[e]
            if pts[0] != positions[v]:
                pts = list(reversed(pts))
            dirs.append(((pts[1].x - pts[0].x, pts[1].y - pts[0].y), e))
        ordered = _sort_edge_dirs_ccw(dirs)
        e_min = ordered[0][1]
        return plane.trace_face((e_min, plane.other_end(e_min, v))).darts
    _, e, i = best_kind
    pts = pieces[e]
    p = pts[i]
    d_prev = (pts[i - 1].x - p.x, pts[i - 1].y - p.y)
    d_next = (pts[i + 1].x - p.x, pts[i + 1].y - p.y)
    lo = sort_directions_ccw([d_prev, d_next])[0]
    va, vb = plane.edges[e]
    # Walk through the bend arriving along the low-angle ray: the tail is the
    # endpoint on that side, so the unbounded region lies left of the dart.
    tail = va if lo == d_prev else vb
    return plane.trace_face((e, tail)).darts


@dataclass
class _AbstractSpec:
    """Duck-typed stand-in for EmbeddedGraph during geometric construction."""

    vertices: List[str]
    edges: Dict[str, Tuple[str, str]]


def embedding_from_geometry(
    positions: Dict[str, Point],
    edges: Dict[str, Tuple[str, str]],
    polylines: Optional[Dict[str, List[Point]]] = None,
) -> EmbeddedGraph:
    """Build a 1-plane embedded graph from exact drawn geometry.

    Edges default to straight segments; crossings, rotations, and the outer
    face are all derived from the coordinates.  This is how the fixed
    lower-bound families are constructed: the geometry is the source of
    truth and the extraction is exact.
    """
    polys: Dict[str, List[Point]] = {}
    for e, (a, b) in edges.items():
        if polylines and e in polylines:
            pts = list(polylines[e])
            if pts[0] != positions[a]:
                pts = list(reversed(pts))
            polys[e] = pts
        else:
            polys[e] = [positions[a], positions[b]]
    spec = _AbstractSpec(vertices=sorted(positions), edges=dict(edges))
    d = PolylineDrawing(spec, dict(positions), polys)  # type: ignore[arg-type]
    return embedding_of(d)


# ---------------------------------------------------------------------------
# Embedding comparison (orientation-preserving, fixed vertex ids)
# ---------------------------------------------------------------------------


def _cyclic_normalize(seq: List) -> Tuple:
    if not seq:
        return ()
    best = None
    for i in range(len(seq)):
        cand = tuple(seq[i:] + seq[:i])
        if best is None or cand < best:
            best = cand
    return best


def _rotation_signature(g: EmbeddedGraph) -> Dict[str, Tuple]:
    """Per real vertex: cyclic rotation as original edge ids."""
    plane = g.plane
    sig = {}
    for v in g.vertices:
        orig = [plane.original_edge_of(e) for e in plane.rotation[v]]
        sig[v] = _cyclic_normalize(orig)
    return sig


def _dummy_signature(g: EmbeddedGraph) -> Dict[Tuple[str, str], Tuple]:
    """Per crossing pair: the cyclic order of (edge, real-end) around it."""
    plane = g.plane
    out = {}
    for x, pair in g.crossings().items():
        entries = []
        for e in plane.rotation[x]:
            orig = plane.original_edge_of(e)
            # Which real endpoint does this fragment lead to?
            v = plane.other_end(e, x)
            entries.append((orig, v))
        out[pair] = _cyclic_normalize(entries)
    return out


def _outer_signature(g: EmbeddedGraph) -> Tuple:
    plane = g.plane
    if not plane.outer_darts:
        return ()
    entries = []
    for e, tail in plane.outer_darts:
        orig = plane.original_edge_of(e)
        label = tail if tail in plane.real else ("#x", tuple(sorted(g.crossings()[tail])))
        entries.append((orig, label))
    return _cyclic_normalize(entries)


def embeddings_equivalent(g1: EmbeddedGraph, g2: EmbeddedGraph, check_outer: bool = True) -> bool:
    """Same 1-plane embedding with identical vertex/edge ids.

    Orientation-preserving only: a mirror image does not compare equal.
    """
    if sorted(g1.vertices) != sorted(g2.vertices):
        return False
    if {e: tuple(sorted(ends)) for e, ends in g1.edges.items()} != {
        e: tuple(sorted(ends)) for e, ends in g2.edges.items()
    }:
        return False
    if sorted(g1.crossings().values()) != sorted(g2.crossings().values()):
        return False
    if _rotation_signature(g1) != _rotation_signature(g2):
        return False
    if _dummy_signature(g1) != _dummy_signature(g2):
        return False
    if check_outer and _outer_signature(g1) != _outer_signature(g2):
        return False
    return True


# ---------------------------------------------------------------------------
# Profile validation
# ---------------------------------------------------------------------------


def validate(d: PolylineDrawing, profile: str) -> ValidationReport:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    structural = d.check_structure()
    if structural:
        raise DrawingError("; ".join(structural))

    inter = _analyze(d)
    violations: List[str] = list(inter.violations)
    crossings = inter.crossings

    slopes = slope_set(d)
    n_slopes = distinct_slope_count(d)
    bends = max_bends(d)
    v_res = min_vertex_resolution(d)
    c_res = min_crossing_resolution(d, crossings)
    one_planar = inter.one_planar

    embedding_ok = False
    if inter.simple and one_planar:
        try:
            induced = embedding_of(d)
            embedding_ok = embeddings_equivalent(induced, d.graph)
        except (DrawingError, EmbeddingError) as exc:
            if profile == "ONEBEND":
                violations.append(f"embedding extraction failed: {exc}")

    if profile == "ONEBEND":
        if not slopes <= set(CANONICAL_SLOPES):
            violations.append(f"slope set {sorted(s.value for s in slopes)} not in the 4 canonical slopes")
        if bends > 1:
            violations.append(f"max bends {bends} > 1")
        if v_res is None or v_res < 1:
            violations.append(f"vertex resolution below pi/4 (got {v_res})")
        if crossings and (c_res is None or c_res < 1):
            violations.append(f"crossing resolution below pi/4 (got {c_res})")
        if not embedding_ok:
            violations.append("embedding not preserved")
    elif profile == "TWOBEND":
        if not slopes <= {SlopeKind.DEG0, SlopeKind.DEG90}:
            violations.append(f"slope set {sorted(s.value for s in slopes)} not in {{0, pi/2}}")
        if bends > 2:
            violations.append(f"max bends {bends} > 2")
        if v_res is None or v_res < 2:
            violations.append(f"vertex resolution below pi/2 (got {v_res})")
        if crossings and (c_res is None or c_res != 2):
            violations.append(f"crossing resolution not exactly pi/2 (got {c_res})")
    else:  # STRAIGHT
        if bends > 0:
            violations.append(f"straight-line profile but {bends} bends present")

    return ValidationReport(
        profile=profile,
        slope_set=slopes,
        slope_count=n_slopes,
        max_bends=bends,
        min_vertex_angle=v_res,
        min_crossing_angle=c_res if crossings else None,
        one_planar=one_planar,
        embedding_preserved=embedding_ok,
        violations=violations,
    )
