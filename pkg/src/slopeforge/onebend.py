"""Incremental 1-bend drawings of 3-connected cubic 1-plane graphs.

The planarization is consumed bottom-up along a canonical ordering.  The
base edge dips to the lowest point of the drawing; every later set attaches
to the contour through ports on the four canonical slopes, with new
vertices placed at exact line intersections.  Horizontal segments injected
at the base and along chains are what make stretching possible: a stretch
cuts the drawing along edges that all carry a horizontal piece, translates
the right part, and lengthens those horizontals, which is how blocked
connection rays and alignment constraints (apex over a middle predecessor,
final-vertex lines) are resolved.

Dummy vertices carry slot bookkeeping: each undrawn fragment is a slot
whose natural port is the opposite of its partner fragment's port; using
any other port spends the edge's single bend as a corner at the crossing.
A per-step checker validates the construction invariants (slopes, bend
budget, base-edge geometry, horizontal structure, free ports, dummy port
patterns) after every insertion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from . import graphutil
from .drawing import PolylineDrawing
from .geometry import (
    IntersectKind,
    Point,
    Segment,
    SlopeKind,
    intersect,
    line_intersection,
    octant,
    slope_of,
)
from .model import EmbeddedGraph, PlaneGraph, find_real_real_face
from .ordering import CanonicalOrdering, canonical_order
from .reembed import normalize_embedding

F = Fraction

# Port directions on the four canonical slopes.
DIRS: Dict[str, Tuple[int, int]] = {
    "E": (1, 0), "NE": (1, 1), "N": (0, 1), "NW": (-1, 1),
    "W": (-1, 0), "SW": (-1, -1), "S": (0, -1), "SE": (1, -1),
}
PORT_OF_DIR = {v: k for k, v in DIRS.items()}
OPP = {"E": "W", "W": "E", "N": "S", "S": "N", "NE": "SW", "SW": "NE", "NW": "SE", "SE": "NW"}
UP_PORTS = ("NE", "N", "NW")

# Successor-slot port preferences, keyed by the natural (straight-through)
# port of the slot and the side the new vertex attaches from.
SLOT_PREFS = {
    "L": {"NE": ["NE", "N"], "N": ["N"], "NW": ["N", "NW"], "E": ["NE", "N"], "W": ["N", "NW"]},
    "R": {"NW": ["NW", "N"], "N": ["N"], "NE": ["N", "NE"], "W": ["NW", "N"], "E": ["N", "NE"]},
    "M": {"NE": ["NE", "N"], "N": ["N"], "NW": ["NW", "N"], "E": ["N", "NE"], "W": ["N", "NW"]},
}

LEGAL_DUMMY_BASES = ({"SW", "SE"}, {"SW", "E"}, {"W", "SE"}, {"W", "E"}, {"SW", "S", "SE"})


class OneBendError(Exception):
    pass


def _dir(port: str) -> Tuple[Fraction, Fraction]:
    dx, dy = DIRS[port]
    return (F(dx), F(dy))


@dataclass
class Gamma:
    """The incremental drawing of the planarization."""

    plane: PlaneGraph
    v1: str
    v2: str
    pos: Dict[str, Point] = field(default_factory=dict)
    polylines: Dict[str, List[Point]] = field(default_factory=dict)  # plane-edge id
    contour: List[str] = field(default_factory=list)
    placed: Set[str] = field(default_factory=set)

    # -- drawn geometry queries -------------------------------------------

    def drawn_edges(self) -> List[str]:
        return sorted(self.polylines)

    def segments(self) -> List[Tuple[str, Segment]]:
        out = []
        for e in self.drawn_edges():
            pts = self.polylines[e]
            for i in range(len(pts) - 1):
                out.append((e, Segment(pts[i], pts[i + 1])))
        return out

    def port_dirs(self, v: str) -> Dict[str, str]:
        """Drawn edge id -> port name at v."""
        out = {}
        p = self.pos[v]
        for e in self.plane.rotation[v]:
            pts = self.polylines.get(e)
            if not pts:
                continue
            q = pts[1] if pts[0] == p else pts[-2]
            o = octant((q.x - p.x, q.y - p.y))
            if o is None:
                raise OneBendError(f"edge {e} leaves {v} off the canonical slopes")
            out[e] = ["E", "NE", "N", "NW", "W", "SW", "S", "SE"][o]
        return out

    def used_ports(self, v: str) -> Set[str]:
        return set(self.port_dirs(v).values())

    def undrawn_at(self, v: str) -> List[str]:
        return [e for e in self.plane.rotation[v] if e not in self.polylines]

    def attachable(self, v: str) -> bool:
        return v in self.placed and bool(self.undrawn_at(v)) and v in self.contour

    def edge_bend_count(self, plane_edge: str) -> int:
        """Bends of the original edge drawn so far (corners at dummies count)."""
        orig = self.plane.original_edge_of(plane_edge)
        pts = self._joined_original(orig)
        if pts is None:
            return 0
        return _count_bends(pts)

    def _joined_original(self, orig: str) -> Optional[List[Point]]:
        frags = self.plane.fragments_of_original(orig)
        if not frags:
            pts = self.polylines.get(orig)
            return list(pts) if pts else None
        drawn = [f for f in frags if f in self.polylines]
        if not drawn:
            return None
        if len(drawn) == 1:
            return list(self.polylines[drawn[0]])
        fa, fb = drawn
        pa, pb = list(self.polylines[fa]), list(self.polylines[fb])
        x = next(v for v in self.plane.edges[fa] if self.plane.is_dummy(v))
        xp = self.pos[x]
        if pa[-1] != xp:
            pa.reverse()
        if pb[0] != xp:
            pb.reverse()
        return pa + pb[1:]


def _count_bends(pts: Sequence[Point]) -> int:
    bends = 0
    for i in range(1, len(pts) - 1):
        d1 = (pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y)
        d2 = (pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y)
        if d1[0] * d2[1] - d1[1] * d2[0] != 0:
            bends += 1
    return bends


# ---------------------------------------------------------------------------
# Slot logic at dummies
# ---------------------------------------------------------------------------


def partner_fragment(plane: PlaneGraph, x: str, frag: str) -> str:
    rot = plane.rotation[x]
    return rot[(rot.index(frag) + 2) % 4]


def natural_port(g: Gamma, x: str, frag: str) -> str:
    """The straight-through port for an undrawn fragment at a dummy."""
    partner = partner_fragment(g.plane, x, frag)
    ports = g.port_dirs(x)
    if partner not in ports:
        raise OneBendError(f"slot {frag} at {x} has no drawn partner yet")
    return OPP[ports[partner]]


def slot_for_side(g: Gamma, x: str, side: str) -> str:
    """The undrawn fragment consumed when attaching to dummy x from a side.

    L-attachments take the rotation successor of the drawn edge bounding
    the contour on x's right; R-attachments the predecessor of the left
    bounding edge.  With one slot left there is no choice.
    """
    undrawn = g.undrawn_at(x)
    if not undrawn:
        raise OneBendError(f"dummy {x} has no free slot")
    if len(undrawn) == 1:
        return undrawn[0]
    rot = g.plane.rotation[x]
    idx = g.contour.index(x)
    if side == "L":
        right_nb = g.contour[idx + 1]
        e_right = _connecting_drawn_edge(g, x, right_nb)
        i = rot.index(e_right)
        for k in range(1, 5):
            cand = rot[(i + k) % 4]
            if cand in undrawn:
                return cand
    else:
        left_nb = g.contour[idx - 1]
        e_left = _connecting_drawn_edge(g, x, left_nb)
        i = rot.index(e_left)
        for k in range(1, 5):
            cand = rot[(i - k) % 4]
            if cand in undrawn:
                return cand
    raise OneBendError(f"no slot found at {x} for side {side}")


def _connecting_drawn_edge(g: Gamma, v: str, w: str) -> str:
    for e in g.plane.rotation[v]:
        if e in g.polylines and g.plane.other_end(e, v) == w:
            return e
    raise OneBendError(f"no drawn edge between contour neighbors {v}, {w}")


# ---------------------------------------------------------------------------
# Connection plans
# ---------------------------------------------------------------------------


@dataclass
class Plan:
    anchor: str
    edge: str          # plane edge to draw
    port: str          # port at the anchor
    corner: bool       # the edge spends its bend at the anchor dummy
    style: str = "ray"  # "ray" straight; "elbow" diagonal then horizontal

    def arrival_dir(self, anchor_pos: Point, apex: Point) -> Tuple[Fraction, Fraction]:
        """Direction of the edge end at the new vertex (pointing away)."""
        if self.style == "elbow":
            return (F(-1), F(0)) if apex.x > anchor_pos.x else (F(1), F(0))
        return (anchor_pos.x - apex.x, anchor_pos.y - apex.y)


def connection_plans(g: Gamma, anchor: str, side: str, target_edge: Optional[str] = None) -> List[Plan]:
    """Candidate plans for attaching a new vertex to a contour anchor."""
    plane = g.plane
    if target_edge is not None and not plane.is_dummy(anchor):
        edge = target_edge
    elif plane.is_dummy(anchor):
        edge = target_edge if target_edge is not None else slot_for_side(g, anchor, side)
    else:
        undrawn = g.undrawn_at(anchor)
        if len(undrawn) != 1:
            raise OneBendError(f"real anchor {anchor} has {len(undrawn)} undrawn edges")
        edge = undrawn[0]
    used = g.used_ports(anchor)
    plans: List[Plan] = []
    diag = {"L": "NE", "R": "NW"}.get(side)
    target = plane.other_end(edge, anchor)
    # An elbow (diagonal, then horizontal into the new vertex) spends the
    # edge's bend but injects a stretchable horizontal; never into a dummy,
    # whose partner slot would then be forced horizontal.
    elbow_ok = (
        diag is not None
        and diag not in used
        and not plane.is_dummy(target)
        and g.edge_bend_count(edge) == 0
    )
    if not plane.is_dummy(anchor):
        # The mirror diagonal last: the contour can back-track, leaving the
        # right anchor below-left of the left one.
        prefs = {"L": ["NE", "N", "NW"], "R": ["NW", "N", "NE"], "M": ["N", "NE", "NW"]}[side]
        for p in prefs:
            if p not in used:
                plans.append(Plan(anchor, edge, p, corner=False))
        if elbow_ok:
            plans.insert(min(1, len(plans)), Plan(anchor, edge, diag, corner=False, style="elbow"))
    else:
        nat = natural_port(g, anchor, edge)
        for p in SLOT_PREFS[side].get(nat, []):
            if p in used:
                continue
            corner = p != nat
            if corner and g.edge_bend_count(edge) > 0:
                continue
            plans.append(Plan(anchor, edge, p, corner=corner))
        if elbow_ok and diag == nat:
            plans.insert(min(1, len(plans)), Plan(anchor, edge, diag, corner=False, style="elbow"))
    if not plans:
        raise OneBendError(
            f"no legal port at {anchor} (side {side}, used {sorted(used)})"
        )
    return plans


# ---------------------------------------------------------------------------
# Stretching
# ---------------------------------------------------------------------------


def _horizontal_edges(g: Gamma) -> Set[str]:
    out = set()
    base = _base_edge(g)
    for e in g.drawn_edges():
        if e == base:
            continue
        pts = g.polylines[e]
        if any(pts[i].y == pts[i + 1].y for i in range(len(pts) - 1)):
            out.add(e)
    return out


def _base_edge(g: Gamma) -> str:
    for e in g.plane.rotation[g.v1]:
        if g.plane.other_end(e, g.v1) == g.v2:
            return e
    raise OneBendError("base edge missing")


def stretch(g: Gamma, left_anchor: str, delta: Fraction) -> Set[str]:
    """Move everything right of a cut just right of left_anchor by delta.

    The cut graph drops the base edge and every horizontal-bearing edge;
    the stationary side is the union of the components of the contour
    prefix ending at left_anchor (the stretch curve leaves the contour
    through the gap after it).  Split edges absorb the motion at their
    first horizontal segment from the stationary side; the base edge
    re-derives its low point.
    """
    if delta <= 0:
        raise ValueError("stretch needs a positive amount")
    base = _base_edge(g)
    hor = _horizontal_edges(g)
    rigid: Set[str] = set()
    left: Set[str] = set()
    for _ in range(len(g.polylines) + 2):
        adj: Dict[str, Set[str]] = {v: set() for v in g.placed}
        for e in g.drawn_edges():
            if e == base or (e in hor and e not in rigid):
                continue
            a, b = g.plane.edges[e]
            adj[a].add(b)
            adj[b].add(a)
        comps = graphutil.components(adj)
        comp_of: Dict[str, int] = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        anchor_comp = comp_of[left_anchor]
        ia = max(
            (i for i, v in enumerate(g.contour) if comp_of[v] == anchor_comp),
            default=0,
        )
        stay_comps = {comp_of[g.contour[i]] for i in range(ia + 1)}
        contour_comps = {comp_of[v] for v in g.contour}
        # Buried components with no contour vertex side geometrically: they
        # stay when they lie left of everything moving along the contour.
        if any(comp_of[v] not in stay_comps for v in g.contour):
            t_lo = max(g.pos[g.contour[i]].x for i in range(ia + 1))
            for ci, comp in enumerate(comps):
                if ci in stay_comps or ci in contour_comps:
                    continue
                if max(g.pos[v].x for v in comp) <= t_lo:
                    stay_comps.add(ci)
        left = {v for v in g.placed if comp_of[v] in stay_comps}
        # A split edge can only absorb at a horizontal running rightward from
        # its stationary side; edges without one are rigid: retry the cut.
        newly_rigid = set()
        for e in g.drawn_edges():
            if e == base or e in rigid or e not in hor:
                continue
            a, b = g.plane.edges[e]
            if (a in left) == (b in left):
                continue
            pts = list(g.polylines[e])
            stay = a if a in left else b
            if pts[0] != g.pos[stay]:
                pts = list(reversed(pts))
            k = _first_rightward_horizontal(pts)
            if k is None:
                newly_rigid.add(e)
        if not newly_rigid:
            break
        rigid |= newly_rigid
    if g.v2 in left:
        raise OneBendError("stretch cut would move the right base vertex's side leftward")
    for v in g.placed:
        if v not in left:
            p = g.pos[v]
            g.pos[v] = Point(p.x + delta, p.y)
    for e in g.drawn_edges():
        a, b = g.plane.edges[e]
        pts = g.polylines[e]
        if e == base:
            continue
        if a in left and b in left:
            continue
        if a not in left and b not in left:
            g.polylines[e] = [Point(p.x + delta, p.y) for p in pts]
            continue
        # Split edge: orient from the stationary endpoint, absorb at the
        # first rightward horizontal segment.
        stay = a if a in left else b
        if pts[0] != g.pos[stay]:
            pts = list(reversed(pts))
        new_pts = list(pts)
        k = _first_rightward_horizontal(pts)
        if k is None:
            raise OneBendError(f"cut edge {e} has no horizontal segment to absorb a stretch")
        for i in range(k + 1, len(new_pts)):
            new_pts[i] = Point(new_pts[i].x + delta, new_pts[i].y)
        g.polylines[e] = new_pts
    _redraw_base(g)
    return left


def _first_rightward_horizontal(pts: List[Point]) -> Optional[int]:
    for i in range(len(pts) - 1):
        if pts[i].y == pts[i + 1].y and pts[i + 1].x > pts[i].x:
            return i
    return None


def _redraw_base(g: Gamma) -> None:
    base = _base_edge(g)
    p1, p2 = g.pos[g.v1], g.pos[g.v2]
    low = line_intersection(p1, _dir("SE"), p2, _dir("SW"))
    assert low is not None
    g.polylines[base] = [p1, low, p2]


# ---------------------------------------------------------------------------
# Geometry of a step
# ---------------------------------------------------------------------------


def _ray_point_at_height(anchor: Point, port: str, y: Fraction) -> Point:
    dx, dy = DIRS[port]
    assert dy == 1
    return Point(anchor.x + dx * (y - anchor.y), y)


def _apex(g: Gamma, pl: Plan, pr: Plan) -> Optional[Point]:
    a, b = g.pos[pl.anchor], g.pos[pr.anchor]
    pt = line_intersection(a, _dir(pl.port), b, _dir(pr.port))
    if pt is None:
        return None
    if pt.y <= a.y or pt.y <= b.y:
        return None
    # Must lie forward along both port rays.
    for anchor, port in ((a, pl.port), (b, pr.port)):
        dx = DIRS[port][0]
        if dx > 0 and pt.x <= anchor.x:
            return None
        if dx < 0 and pt.x >= anchor.x:
            return None
        if dx == 0 and pt.x != anchor.x:
            return None
    return pt


def _needed_gap(g: Gamma, pl: Plan, pr: Plan, extra: Fraction = F(1)) -> Fraction:
    """Extra horizontal separation so the port rays meet at least `extra`
    above both anchors."""
    a, b = g.pos[pl.anchor], g.pos[pr.anchor]
    dl, dr = DIRS[pl.port][0], DIRS[pr.port][0]
    gap = b.x - a.x
    if dl == 1 and dr == -1:
        ta = (gap + (b.y - a.y)) / 2  # apex height above a
        tb = (gap + (a.y - b.y)) / 2
        return 2 * (extra - min(ta, tb))
    if dl == 0 and dr == -1:
        ta = (b.y + gap) - a.y
        tb = gap
        return extra - min(ta, tb)
    if dl == 1 and dr == 0:
        ta = gap
        tb = (a.y + gap) - b.y
        return extra - min(ta, tb)
    raise OneBendError("parallel vertical connection rays cannot meet")


def _blockers(
    g: Gamma,
    new_segments: List[Segment],
    allowed_points: Set[Point],
) -> List[Tuple[str, Segment]]:
    """Drawn segments improperly intersected by the candidate geometry.

    The new polylines may meet the drawing only at allowed_points (the
    connection anchors); anything else, including a new vertex landing on
    an existing point, blocks the placement.
    """
    out = []
    boxes = [ns.bbox() for ns in new_segments]
    for e, seg in g.segments():
        b = seg.bbox()
        for ns, nb in zip(new_segments, boxes):
            if b[2] < nb[0] or nb[2] < b[0] or b[3] < nb[1] or nb[3] < b[1]:
                continue
            res = intersect(seg, ns)
            if res.kind is IntersectKind.DISJOINT:
                continue
            if res.point is not None and res.point in allowed_points:
                continue
            out.append((e, seg))
            break
    return out


# ---------------------------------------------------------------------------
# The drawer
# ---------------------------------------------------------------------------


MAX_REPAIRS = 80


class OneBendDrawer:
    def __init__(self, plane: PlaneGraph, delta: CanonicalOrdering, check_steps: bool = True):
        self.plane = plane
        self.delta = delta
        self.check_steps = check_steps
        self.g = Gamma(plane=plane, v1=delta.v1, v2=delta.v2)
        self.trace: List[Dict[str, List[Point]]] = []

    # -- public -------------------------------------------------------------

    def run(self) -> Gamma:
        sets = self.delta.sets
        self._draw_base(sets[1])
        for i in range(2, len(sets) - 1):
            self._add_set(sets[i])
            self._post_step(f"set {i}")
        self._place_final(sets[-1].vertices[0])
        self._post_step("final")
        return self.g

    # -- base ---------------------------------------------------------------

    def _draw_base(self, v2set) -> None:
        # Flat base: the second set sits on the base line between v1 and v2,
        # all connections straight horizontals.  Fragments through a base
        # dummy stay bend-free, so its successor slots keep their corner
        # budget, and the upper ports of v1 and v2 stay untouched.
        g = self.g
        v1, v2 = g.v1, g.v2
        members = v2set.vertices
        l = len(members)
        width = 2 * l + 2
        g.pos[v1] = Point(F(0), F(0))
        g.pos[v2] = Point(F(width), F(0))
        g.placed.update((v1, v2))
        _redraw_base(g)
        prev = v1
        for k, z in enumerate(members):
            g.pos[z] = Point(F(2 * k + 2), F(0))
            g.placed.add(z)
            g.polylines[self._edge_between(prev, z)] = [g.pos[prev], g.pos[z]]
            prev = z
        g.polylines[self._edge_between(prev, v2)] = [g.pos[prev], g.pos[v2]]
        g.contour = [v1] + list(members) + [v2]
        self._post_step("base")

    def _edge_between(self, a: str, b: str) -> str:
        for e in self.plane.rotation[a]:
            if self.plane.other_end(e, a) == b:
                return e
        raise OneBendError(f"no planarization edge between {a} and {b}")

    # -- generic insertion ----------------------------------------------------

    def _preds_on_contour(self, members: List[str]) -> List[str]:
        g = self.g
        member_set = set(members)
        preds = []
        for v in g.contour:
            for e in self.plane.rotation[v]:
                if self.plane.other_end(e, v) in member_set:
                    preds.append(v)
                    break
        return preds

    def _add_set(self, cs) -> None:
        members = list(cs.vertices)
        preds = self._preds_on_contour(members)
        if len(preds) < 2:
            raise OneBendError(f"set {members} has fewer than two contour predecessors")
        u_l, u_r = preds[0], preds[-1]
        middles = preds[1:-1]
        if len(members) == 1:
            self._insert_singleton(members[0], u_l, u_r, middles)
        else:
            if middles:
                raise OneBendError("a chain may only attach at its two end predecessors")
            self._insert_chain(members, u_l, u_r)

    def _insert_singleton(self, v: str, u_l: str, u_r: str, middles: List[str]) -> None:
        g = self.g
        plans_l = connection_plans(g, u_l, "L", self._edge_between_checked(u_l, v))
        plans_r = connection_plans(g, u_r, "R", self._edge_between_checked(u_r, v))
        middle_options = [
            connection_plans(g, w, "M", self._edge_between_checked(w, v)) for w in middles
        ]
        self._place_with_repairs(v, plans_l, plans_r, middle_options)

    def _edge_between_checked(self, anchor: str, v: str) -> str:
        e = self._edge_between(anchor, v)
        if e in self.g.polylines:
            raise OneBendError(f"edge {e} already drawn")
        return e

    def _place_with_repairs(self, v, plans_l, plans_r, middle_options) -> None:
        import itertools

        last_error = None
        combos = list(itertools.product(*middle_options)) if middle_options else [()]
        for pl in plans_l:
            for pr in plans_r:
                if DIRS[pl.port] == DIRS[pr.port] and "elbow" not in (pl.style, pr.style):
                    continue
                for plans_m in combos:
                    if self._try_place(v, pl, pr, list(plans_m)):
                        return
                    last_error = f"ports {pl.port}/{pr.port} failed"
        # Re-rolled pairings: let a middle predecessor define the apex with
        # one of the end anchors, aligning the other end instead.
        if middle_options and len(middle_options) == 1:
            for pm in middle_options[0]:
                if pm.style != "ray":
                    continue
                for pl in plans_l:
                    for pr in plans_r:
                        if pl.style != "ray" or pr.style != "ray":
                            continue
                        splice = (pl.anchor, pr.anchor)
                        if DIRS[pl.port] != DIRS[pm.port]:
                            if self._try_place(v, pl, pm, [pr], splice=splice):
                                return
                        if DIRS[pm.port] != DIRS[pr.port]:
                            if self._try_place(v, pm, pr, [pl], splice=splice):
                                return
        raise OneBendError(f"could not place {v}: {last_error}")

    def _defining_pair(self, pl: Plan, pr: Plan, plans_m: List[Plan]):
        """The two plans whose lines fix the new vertex, plus the rest."""
        if pl.style == "ray" and pr.style == "ray":
            return pl, pr, list(plans_m)
        if pl.style == "elbow" and pr.style == "ray":
            if plans_m:
                return plans_m[0], pr, plans_m[1:]
            return None, pr, []
        if pr.style == "elbow" and pl.style == "ray":
            if plans_m:
                return pl, plans_m[0], plans_m[1:]
            return pl, None, []
        return False  # two elbows: unsupported

    def _try_place(self, v, pl: Plan, pr: Plan, plans_m: List[Plan], splice=None) -> bool:
        g = self.g
        if splice is None:
            splice = (pl.anchor, pr.anchor)
        defined = self._defining_pair(pl, pr, plans_m)
        if defined is False:
            return False
        da, db, rest = defined
        last_sig = None
        spread_tried = False
        for _ in range(MAX_REPAIRS):
            apex = self._apex_of(da, db)
            if apex is None:
                anchor_a = da.anchor if da else pl.anchor
                anchor_b = db.anchor if db else pr.anchor
                try:
                    need = _needed_gap(g, da or pl, db or pr) + 1
                except OneBendError:
                    return False
                if not self._stretch_span(anchor_a, anchor_b, need):
                    return False
                continue
            # Keep the drawing chunky: spread once when the tent is cramped.
            top = max(g.pos[pl.anchor].y, g.pos[pr.anchor].y)
            if not spread_tried and apex.y - top < 1 and da and db:
                spread_tried = True
                try:
                    need = _needed_gap(g, da, db, extra=F(2)) + 1
                except OneBendError:
                    need = F(0)
                if need > 0 and self._stretch_span(da.anchor, db.anchor, need):
                    continue
            # The apex must sit strictly above every middle anchor.
            too_low = [pm for pm in plans_m if apex.y <= g.pos[pm.anchor].y]
            if too_low:
                sig = ("low", apex)
                if sig == last_sig:
                    return False
                last_sig = sig
                if not self._stretch_between(pl.anchor, pr.anchor, F(2)):
                    return False
                continue
            # Remaining constrained plans: their lines must pass the apex.
            realign = False
            for pm in rest:
                m = self._middle_mismatch(da, db, pm) if da and db else None
                if m is None or m == 0:
                    continue
                sig = ("align", pm.anchor, apex, m)
                if sig == last_sig:
                    return False
                last_sig = sig
                if not self._align_middle(da, db, pm):
                    return False
                realign = True
                break
            if realign:
                continue
            if not self._elbows_feasible(apex, [pl, pr]):
                if not self._stretch_between(pl.anchor, pr.anchor, F(2)):
                    return False
                continue
            # Arrival directions at the new vertex must be distinct ports.
            arrivals = set()
            clash = False
            for plan in [pl, pr] + plans_m:
                o = octant(plan.arrival_dir(g.pos[plan.anchor], apex))
                if o is None or o in arrivals:
                    clash = True
                arrivals.add(o)
            if clash:
                return False
            polys = self._connection_polylines(v, apex, [pl, pr] + plans_m)
            segs = [Segment(p[i], p[i + 1]) for p in polys.values() for i in range(len(p) - 1)]
            allowed = {g.pos[plan.anchor] for plan in [pl, pr] + plans_m}
            blockers = _blockers(g, segs, allowed)
            if not blockers:
                self._commit(v, apex, polys, splice)
                return True
            sig = ("block", blockers[0][1].a, blockers[0][1].b, apex)
            if sig == last_sig:
                return False
            last_sig = sig
            if not self._resolve_blocker(pl, pr, blockers[0], apex):
                return False
        return False

    def _apex_of(self, da: Optional[Plan], db: Optional[Plan]) -> Optional[Point]:
        g = self.g
        if da is not None and db is not None:
            return _apex(g, da, db)
        plan = da or db
        if plan is None:
            return None
        tops = max(p.y for p in g.pos.values())
        return _ray_point_at_height(g.pos[plan.anchor], plan.port, tops + 1)

    def _elbows_feasible(self, apex: Point, plans: List[Plan]) -> bool:
        g = self.g
        for plan in plans:
            if plan.style != "elbow":
                continue
            a = g.pos[plan.anchor]
            if apex.y <= a.y:
                return False
            bend_x = a.x + DIRS[plan.port][0] * (apex.y - a.y)
            if plan.port == "NE" and apex.x <= bend_x:
                return False
            if plan.port == "NW" and apex.x >= bend_x:
                return False
        return True

    # -- stretch drivers ------------------------------------------------------

    def _snapshot(self):
        g = self.g
        return (
            dict(g.pos),
            {e: list(p) for e, p in g.polylines.items()},
        )

    def _restore(self, snap) -> None:
        g = self.g
        g.pos = dict(snap[0])
        g.polylines = {e: list(p) for e, p in snap[1].items()}

    def _stretch_between(self, left_v: str, right_v: str, delta: Fraction) -> bool:
        """Stretch right of left_v; fail (and roll back) when the cut does
        not separate right_v or the moved drawing stops being simple."""
        g = self.g
        if delta <= 0:
            delta = F(1)
        snap = self._snapshot()
        try:
            left = stretch(g, left_v, delta)
        except OneBendError:
            self._restore(snap)
            return False
        if right_v in left or _check_simple(g):
            self._restore(snap)
            return False
        return True

    def _stretch_span(self, left_v: str, right_v: str, delta: Fraction) -> bool:
        """Stretch somewhere strictly between two contour vertices, trying
        every gap of the contour span until one cut separates them."""
        g = self.g
        if self._stretch_between(left_v, right_v, delta):
            return True
        try:
            li = g.contour.index(left_v)
            ri = g.contour.index(right_v)
        except ValueError:
            return False
        for k in range(li + 1, ri):
            if self._stretch_between(g.contour[k], right_v, delta):
                return True
        return False

    def _middle_mismatch(self, pl: Plan, pr: Plan, pm: Plan) -> Optional[Fraction]:
        apex = _apex(self.g, pl, pr)
        if apex is None:
            return None
        w = self.g.pos[pm.anchor]
        dxm = DIRS[pm.port][0]
        return apex.x - (w.x + dxm * (apex.y - w.y))

    def _align_middle(self, pl: Plan, pr: Plan, pm: Plan) -> bool:
        """Stretch until the middle plan's line passes through the apex.

        The stretch response is linear, so one probe per candidate cut gives
        the exact amount.  Returns False when no rightward cut can fix it.
        """
        g = self.g
        m = self._middle_mismatch(pl, pr, pm)
        if m is None:
            return False
        if m == 0:
            return True
        probe = F(4)
        candidate_cuts = (
            (pl.anchor, pm.anchor),
            (pm.anchor, pr.anchor),
            (pl.anchor, pr.anchor),
        )
        for cut_anchor, must_move in candidate_cuts:
            snap = self._snapshot()
            try:
                left = stretch(g, cut_anchor, probe)
            except OneBendError:
                self._restore(snap)
                continue
            if must_move in left:
                self._restore(snap)
                continue
            m2 = self._middle_mismatch(pl, pr, pm)
            self._restore(snap)
            if m2 is None:
                continue
            rate = (m2 - m) / probe
            if rate == 0:
                continue
            delta = -m / rate
            if delta <= 0:
                continue
            if not self._stretch_between(cut_anchor, must_move, delta):
                continue
            if self._middle_mismatch(pl, pr, pm) == 0:
                return True
            return False
        return False

    def _resolve_blocker(self, pl: Plan, pr: Plan, blocker, apex) -> bool:
        g = self.g
        e, seg = blocker
        a, b = g.plane.edges[e]
        contour_pos = {v: i for i, v in enumerate(g.contour)}
        mid_x = (seg.a.x + seg.b.x) / 2
        if mid_x <= apex.x:
            # Blocker under the left ray: push it (and the right part) right.
            amount = _clear_amount(g, pl, seg)
            first = a if g.pos[a].x >= mid_x else b
            for target in (first, b if first == a else a):
                if self._stretch_between(pl.anchor, target, amount):
                    return True
            return False
        # Blocker under the right ray: move the right anchor away while the
        # blocker's whole cluster stays, so cut at its rightmost contour
        # vertex rather than dragging it along.
        amount = _clear_amount(g, pr, seg)
        cands = sorted(
            (v for v in (a, b) if v in contour_pos),
            key=lambda v: -contour_pos[v],
        ) + [v for v in (a, b) if v not in contour_pos]
        for cand in cands:
            if cand == pr.anchor:
                continue
            if self._stretch_between(cand, pr.anchor, amount):
                return True
        return False

    # -- committing a placement ------------------------------------------------

    def _connection_polylines(self, v, apex: Point, plans: List[Plan]) -> Dict[str, List[Point]]:
        g = self.g
        out = {}
        for plan in plans:
            a = g.pos[plan.anchor]
            if plan.style == "elbow":
                bend = Point(a.x + DIRS[plan.port][0] * (apex.y - a.y), apex.y)
                out[plan.edge] = [a, bend, apex]
            else:
                out[plan.edge] = [a, apex]
        return out

    def _commit(self, v, apex: Point, polys, splice) -> None:
        g = self.g
        g.pos[v] = apex
        g.placed.add(v)
        for e, pts in polys.items():
            g.polylines[e] = pts
        li = g.contour.index(splice[0])
        ri = g.contour.index(splice[1])
        g.contour = g.contour[: li + 1] + [v] + g.contour[ri:]

    # -- chains -----------------------------------------------------------------

    def _insert_chain(self, members: List[str], u_l: str, u_r: str) -> None:
        g = self.g
        first, last = members[0], members[-1]
        e_l = self._edge_between_checked(u_l, first)
        e_r = self._edge_between_checked(u_r, last)
        # Chains build their own horizontal elbows; only ray plans apply.
        plans_l = [p for p in connection_plans(g, u_l, "L", e_l) if p.style == "ray"]
        plans_r = [p for p in connection_plans(g, u_r, "R", e_r) if p.style == "ray"]
        last_error = None
        for pl in plans_l:
            for pr in plans_r:
                if self._try_place_chain(members, pl, pr):
                    return
                last_error = f"ports {pl.port}/{pr.port}"
        raise OneBendError(f"could not place chain {members}: {last_error}")

    def _chain_elbow_ok(self, plan: Plan, end_vertex: str) -> bool:
        """A horizontal elbow on the end connection keeps the contour
        stretchable; it is legal when the chain end is real and the edge
        still has its whole bend budget."""
        g = self.g
        if g.plane.is_dummy(end_vertex):
            return False
        if plan.corner:
            return False
        return g.edge_bend_count(plan.edge) == 0

    def _chain_baseline(self, pl: Plan, pr: Plan, l: int) -> Optional[Fraction]:
        """A height where both port rays are live and the span is positive.

        span(Y) is linear, so the feasible interval is computed directly;
        None when it is empty at the current geometry.
        """
        g = self.g
        a, b = g.pos[pl.anchor], g.pos[pr.anchor]
        dxl, dxr = DIRS[pl.port][0], DIRS[pr.port][0]
        y_min = max(a.y, b.y)
        slope = F(dxr - dxl)
        c0 = (b.x - dxr * b.y) - (a.x - dxl * a.y)
        # span(Y) = c0 + slope * Y must be positive with Y > y_min.
        if slope == 0:
            return y_min + F(1, 2) if c0 > 0 else None
        root = -c0 / slope
        if slope > 0:
            return max(y_min, root) + F(1, 2)
        if root <= y_min:
            return None
        return y_min + min(F(1, 2), (root - y_min) / 2)

    def _try_place_chain(self, members: List[str], pl: Plan, pr: Plan) -> bool:
        g = self.g
        l = len(members)
        elbow_l = self._chain_elbow_ok(pl, members[0])
        elbow_r = self._chain_elbow_ok(pr, members[-1])
        last_sig = None
        spread_tried = False
        for _ in range(MAX_REPAIRS):
            y_b = self._chain_baseline(pl, pr, l)
            if y_b is None:
                try:
                    need = _needed_gap(g, pl, pr, extra=F(l + 1)) + 1
                except OneBendError:
                    need = F(l + 2)
                if not self._stretch_span(pl.anchor, pr.anchor, need):
                    return False
                continue
            q1 = _ray_point_at_height(g.pos[pl.anchor], pl.port, y_b)
            q2 = _ray_point_at_height(g.pos[pr.anchor], pr.port, y_b)
            span = q2.x - q1.x
            if span <= 0:
                if not self._stretch_between(pl.anchor, pr.anchor, F(2)):
                    return False
                continue
            if not spread_tried and span < 1:
                spread_tried = True
                if self._stretch_span(pl.anchor, pr.anchor, F(l + 2)):
                    continue
            x_lo = q1.x + (span / 4 if elbow_l else F(0))
            x_hi = q2.x - (span / 4 if elbow_r else F(0))
            step = (x_hi - x_lo) / (l - 1) if l > 1 else F(0)
            positions = [Point(x_lo + step * k, y_b) for k in range(l)]
            polys: Dict[str, List[Point]] = {}
            if elbow_l:
                polys[pl.edge] = [g.pos[pl.anchor], q1, positions[0]]
            else:
                polys[pl.edge] = [g.pos[pl.anchor], positions[0]]
            if elbow_r:
                polys[pr.edge] = [g.pos[pr.anchor], q2, positions[-1]]
            else:
                polys[pr.edge] = [g.pos[pr.anchor], positions[-1]]
            for k in range(l - 1):
                e = self._edge_between(members[k], members[k + 1])
                polys[e] = [positions[k], positions[k + 1]]
            segs = [Segment(p[i], p[i + 1]) for p in polys.values() for i in range(len(p) - 1)]
            allowed = {g.pos[pl.anchor], g.pos[pr.anchor]}
            blockers = _blockers(g, segs, allowed)
            if blockers:
                mid = Point((q1.x + q2.x) / 2, y_b)
                sig = (blockers[0][1].a, blockers[0][1].b, mid)
                if sig == last_sig:
                    return False
                last_sig = sig
                if not self._resolve_blocker(pl, pr, blockers[0], mid):
                    return False
                continue
            for k, z in enumerate(members):
                g.pos[z] = positions[k]
                g.placed.add(z)
            for e, pts in polys.items():
                g.polylines[e] = pts
            li = g.contour.index(pl.anchor)
            ri = g.contour.index(pr.anchor)
            g.contour = g.contour[: li + 1] + members + g.contour[ri:]
            return True
        return False

    # -- the final vertex --------------------------------------------------------

    def _place_final(self, vn: str) -> None:
        g = self.g
        preds = self._preds_on_contour([vn])
        if preds[0] != g.v1:
            if g.v1 in preds:
                preds.remove(g.v1)
                preds.insert(0, g.v1)
            else:
                raise OneBendError("the final vertex is not adjacent to the left base vertex")
        if self.plane.is_dummy(vn):
            self._final_dummy(vn, preds)
        else:
            self._final_real(vn, preds)

    def _final_real(self, vn: str, preds: List[str]) -> None:
        if len(preds) != 3:
            raise OneBendError(f"real final vertex with {len(preds)} predecessors")
        self._insert_singleton(vn, preds[0], preds[-1], preds[1:-1])

    def _final_dummy(self, vn: str, preds: List[str]) -> None:
        g = self.g
        if len(preds) != 4:
            raise OneBendError(f"dummy final vertex with {len(preds)} predecessors")
        w1, w2, w3, w4 = preds
        e1 = self._edge_between_checked(w1, vn)
        e2 = self._edge_between_checked(w2, vn)
        e3 = self._edge_between_checked(w3, vn)
        e4 = self._edge_between_checked(w4, vn)
        pl = Plan(w2, e2, "NE", corner=False)
        pr = Plan(w3, e3, "NW", corner=False)
        for _ in range(MAX_REPAIRS):
            apex = _apex(g, pl, pr)
            if apex is None:
                if not self._stretch_between(w2, w3, _needed_gap(g, pl, pr) + 1):
                    raise OneBendError("final dummy: rays cannot meet")
                continue
            p1, p4 = g.pos[w1], g.pos[w4]
            arch1_bend = Point(p1.x, apex.y + (apex.x - p1.x))
            arch4_bend = Point(p4.x, apex.y + (p4.x - apex.x))
            if p1.x >= apex.x or p4.x <= apex.x:
                if not self._stretch_between(w2, w3, F(2)):
                    raise OneBendError("final dummy: apex not between the outer predecessors")
                continue
            polys = {
                e2: [g.pos[w2], apex],
                e3: [g.pos[w3], apex],
                e1: [p1, arch1_bend, apex],
                e4: [p4, arch4_bend, apex],
            }
            segs = [Segment(p[i], p[i + 1]) for p in polys.values() for i in range(len(p) - 1)]
            allowed = {g.pos[w] for w in (w1, w2, w3, w4)}
            blockers = _blockers(g, segs, allowed)
            if blockers:
                if not self._resolve_blocker(pl, pr, blockers[0], apex):
                    raise OneBendError(f"final dummy blocked: {blockers[0][0]}")
                continue
            g.pos[vn] = apex
            g.placed.add(vn)
            for e, pts in polys.items():
                g.polylines[e] = pts
            g.contour = [g.v1, vn, g.v2]
            return
        raise OneBendError("final dummy placement did not converge")

    # -- checks -----------------------------------------------------------------

    def _post_step(self, label: str) -> None:
        self.trace.append({e: list(p) for e, p in self.g.polylines.items()})
        if self.check_steps:
            problems = check_gamma(self.g)
            if problems:
                raise OneBendError(f"invariants broken after {label}: {problems[:4]}")


def _clear_amount(g: Gamma, plan: Plan, seg: Segment) -> Fraction:
    """Horizontal separation needed for the plan's ray to clear a segment."""
    a = g.pos[plan.anchor]
    dx = DIRS[plan.port][0]
    top = max(seg.a.y, seg.b.y)
    if dx == 1:
        sx = min(seg.a.x, seg.b.x)
        return (top - a.y) - (sx - a.x) + 1
    if dx == -1:
        sx = max(seg.a.x, seg.b.x)
        return (top - a.y) - (a.x - sx) + 1
    return F(2)


# ---------------------------------------------------------------------------
# Invariant checker P1 - P6
# ---------------------------------------------------------------------------


def check_gamma(g: Gamma) -> List[str]:
    problems: List[str] = []
    problems.extend(_check_p1(g))
    problems.extend(_check_p2(g))
    problems.extend(_check_p3(g))
    problems.extend(_check_p4(g))
    problems.extend(_check_p5(g))
    problems.extend(_check_p6(g))
    problems.extend(_check_rotations(g))
    problems.extend(_check_simple(g))
    return problems


def _check_rotations(g: Gamma) -> List[str]:
    """Drawn edge ends must respect every vertex's input rotation."""
    out = []
    for v in sorted(g.placed):
        drawn_cyc = _drawn_cyclic(g, v)
        if drawn_cyc is None or len(drawn_cyc) <= 2:
            continue
        if not _cyclic_subsequence(drawn_cyc, g.plane.rotation[v]):
            out.append(f"rotation at {v} not preserved")
    return out


def _check_p1(g: Gamma) -> List[str]:
    out = []
    for e, seg in g.segments():
        if slope_of(seg).kind is SlopeKind.OTHER:
            out.append(f"P1: segment of {e} off the canonical slopes")
    return out


def _check_p2(g: Gamma) -> List[str]:
    out = []
    seen: Set[str] = set()
    for e in g.drawn_edges():
        orig = g.plane.original_edge_of(e)
        if orig in seen:
            continue
        seen.add(orig)
        pts = g._joined_original(orig)
        if pts and _count_bends(pts) > 1:
            out.append(f"P2: edge {orig} has {_count_bends(pts)} bends")
    return out


def _check_p3(g: Gamma) -> List[str]:
    out = []
    base = _base_edge(g)
    if base not in g.polylines:
        return ["P3: base edge not drawn"]
    pts = g.polylines[base]
    if len(pts) != 3:
        return [f"P3: base edge drawn with {len(pts) - 2} bends"]
    p1, low, p2 = pts
    if slope_of(Segment(p1, low)).kind is not SlopeKind.DEG135:
        out.append("P3: left base segment not on the SE port slope")
    if slope_of(Segment(low, p2)).kind is not SlopeKind.DEG45:
        out.append("P3: right base segment not on the SW port slope")
    all_points = _all_drawing_points(g)
    for q in all_points:
        if q == low:
            continue
        if q.y <= low.y:
            out.append(f"P3: {q} not above the base low point")
            break
    for q in all_points:
        if q in (p1, p2, low):
            continue
        if q.y - p1.y == -(q.x - p1.x) or q.y - p2.y == q.x - p2.x:
            out.append(f"P3: {q} lies on a base support line")
            break
    return out


def _all_drawing_points(g: Gamma) -> List[Point]:
    pts = list(g.pos.values())
    for e in g.drawn_edges():
        pts.extend(g.polylines[e][1:-1])
    return pts


def _check_p4(g: Gamma) -> List[str]:
    out = []
    att = [v for v in g.contour if g.attachable(v) or v in (g.v1, g.v2)]
    contour = g.contour
    for i in range(len(att) - 1):
        u, v = att[i], att[i + 1]
        iu, iv = contour.index(u), contour.index(v)
        path = contour[iu : iv + 1]
        segs = _contour_path_segments(g, path)
        if u not in (g.v1,) and v not in (g.v2,):
            pass
        # (b) both real attachable: a horizontal segment exists, or nothing
        # on the path could ever block a stretch (no verticals at all).
        if (
            not g.plane.is_dummy(u)
            and not g.plane.is_dummy(v)
            and g.attachable(u)
            and g.attachable(v)
        ):
            has_horizontal = any(s.a.y == s.b.y for s in segs)
            has_vertical = any(s.a.x == s.b.x for s in segs)
            if not has_horizontal and has_vertical:
                out.append(f"P4b: no horizontal on the contour between {u} and {v}")
        # (a) upward verticals need an earlier horizontal.  Verticals that
        # are whole connection edges (N-port attachments) are exempt: their
        # clearance is negotiated at placement time, not by stretching.
        plain = _without_vertical_edges(g, path, segs)
        if g.attachable(u) and not _l_used(g, u):
            if not _p4a_ok(plain):
                out.append(f"P4a: vertical before any horizontal between {u} and {v}")
        if g.attachable(v) and not _r_used(g, v):
            if not _p4a_ok([Segment(s.b, s.a) for s in reversed(plain)]):
                out.append(f"P4a: vertical before any horizontal between {v} and {u} (reverse)")
    # (c) separation form: u, v in different parts after cutting horizontals.
    hor = _horizontal_edges(g)
    base = _base_edge(g)
    adj: Dict[str, Set[str]] = {w: set() for w in g.placed}
    for e in g.drawn_edges():
        if e in hor or e == base:
            continue
        a, b = g.plane.edges[e]
        adj[a].add(b)
        adj[b].add(a)
    for i in range(len(att) - 1):
        u, v = att[i], att[i + 1]
        iu, iv = contour.index(u), contour.index(v)
        path = contour[iu : iv + 1]
        segs = _without_vertical_edges(g, path, _contour_path_segments(g, path))
        # Cuts are needed to push vertical segments out of connection rays,
        # so separability is required exactly where such verticals exist.
        if any(s.a.x == s.b.x for s in segs):
            if _connected(adj, u, v):
                out.append(f"P4c: no all-horizontal cut separates {u} from {v}")
    return out


def _without_vertical_edges(g: Gamma, path: List[str], segs: List[Segment]) -> List[Segment]:
    """Drop segments of edges drawn as single vertical segments."""
    vertical_edges = set()
    for a, b in zip(path, path[1:]):
        e = _connecting_drawn_edge(g, a, b)
        pts = g.polylines[e]
        if len(pts) == 2 and pts[0].x == pts[1].x:
            vertical_edges.add((pts[0], pts[1]))
            vertical_edges.add((pts[1], pts[0]))
    return [s for s in segs if (s.a, s.b) not in vertical_edges]


def _contour_path_segments(g: Gamma, path: List[str]) -> List[Segment]:
    segs: List[Segment] = []
    for a, b in zip(path, path[1:]):
        e = _connecting_drawn_edge(g, a, b)
        pts = list(g.polylines[e])
        if pts[0] != g.pos[a]:
            pts.reverse()
        for i in range(len(pts) - 1):
            segs.append(Segment(pts[i], pts[i + 1]))
    return segs


def _p4a_ok(segs: List[Segment]) -> bool:
    seen_horizontal = False
    for s in segs:
        if s.a.y == s.b.y:
            seen_horizontal = True
        elif s.a.x == s.b.x and s.b.y > s.a.y and not seen_horizontal:
            return False
    return True


def _connected(adj, u, v) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        w = stack.pop()
        if w == v:
            return True
        for z in adj[w]:
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return False


def _l_used(g: Gamma, v: str) -> bool:
    return any(p in ("NE",) for p in g.used_ports(v)) and not g.plane.is_dummy(v)


def _r_used(g: Gamma, v: str) -> bool:
    return any(p in ("NW",) for p in g.used_ports(v)) and not g.plane.is_dummy(v)


def _check_p5(g: Gamma) -> List[str]:
    out = []
    for v in g.contour:
        if g.plane.is_dummy(v) or not g.attachable(v):
            continue
        used = g.used_ports(v)
        bad = used & set(UP_PORTS)
        if bad:
            out.append(f"P5: attachable real {v} has occupied upper ports {sorted(bad)}")
    return out


def _check_p6(g: Gamma) -> List[str]:
    out = []
    for v in g.contour:
        if not g.plane.is_dummy(v) or not g.attachable(v):
            continue
        ports = g.port_dirs(v)
        base_ports = {p for p in ports.values() if p not in UP_PORTS}
        n_succ_drawn = sum(1 for p in ports.values() if p in UP_PORTS)
        if base_ports not in [set(s) for s in LEGAL_DUMMY_BASES]:
            out.append(f"P6: dummy {v} base ports {sorted(base_ports)} not in the case table")
        if len(ports) + len(g.undrawn_at(v)) != 4:
            out.append(f"P6: dummy {v} port bookkeeping broken")
        # Rotation consistency: drawn edge-ends around v must respect the
        # input rotation cyclically.
        drawn_cyc = _drawn_cyclic(g, v)
        if drawn_cyc is not None and not _cyclic_subsequence(
            drawn_cyc, g.plane.rotation[v]
        ):
            out.append(f"P6: rotation at dummy {v} not preserved")
    return out


def _drawn_cyclic(g: Gamma, v: str) -> Optional[List[str]]:
    ports = g.port_dirs(v)
    if not ports:
        return None
    order = ["E", "NE", "N", "NW", "W", "SW", "S", "SE"]
    return sorted(ports, key=lambda e: order.index(ports[e]))


def _cyclic_subsequence(sub: List[str], full: List[str]) -> bool:
    n = len(full)
    positions = {e: i for i, e in enumerate(full)}
    if any(e not in positions for e in sub):
        return False
    idx = [positions[e] for e in sub]
    k = len(idx)
    if k <= 2:
        return True
    for start in range(k):
        rotated = idx[start:] + idx[:start]
        gaps_ok = all(
            (rotated[(j + 1) % k] - rotated[j]) % n > 0 for j in range(k)
        )
        total = sum((rotated[(j + 1) % k] - rotated[j]) % n for j in range(k))
        if gaps_ok and total == n:
            return True
    return False


def _float_box(seg: Segment):
    ax, ay, bx, by = float(seg.a.x), float(seg.a.y), float(seg.b.x), float(seg.b.y)
    lo_x, hi_x = (ax, bx) if ax <= bx else (bx, ax)
    lo_y, hi_y = (ay, by) if ay <= by else (by, ay)
    pad_x = 1e-9 * (abs(hi_x) + 1)
    pad_y = 1e-9 * (abs(hi_y) + 1)
    return (lo_x - pad_x, lo_y - pad_y, hi_x + pad_x, hi_y + pad_y)


def _check_simple(g: Gamma) -> List[str]:
    out = []
    segs = g.segments()
    boxes = [_float_box(s) for _, s in segs]
    order = sorted(range(len(segs)), key=lambda i: boxes[i][0])
    active: List[int] = []
    for idx in order:
        e1, s1 = segs[idx]
        b1 = boxes[idx]
        active = [j for j in active if boxes[j][2] >= b1[0]]
        for j in active:
            e2, s2 = segs[j]
            b2 = boxes[j]
            if b1[3] < b2[1] or b2[3] < b1[1]:
                continue
            res = intersect(s1, s2)
            if res.kind is IntersectKind.DISJOINT:
                continue
            if res.kind is IntersectKind.SHARED_ENDPOINT:
                if e1 == e2:
                    continue
                pt = res.point
                common = set(g.plane.edges[e1]) & set(g.plane.edges[e2])
                if any(g.pos.get(vv) == pt for vv in common):
                    continue
            out.append(f"simple: {e1} and {e2} intersect improperly ({res.kind.value})")
            return out
        active.append(idx)
    seen_pos: Dict[Point, str] = {}
    for v in sorted(g.placed):
        p = g.pos[v]
        if p in seen_pos:
            out.append(f"simple: vertices {seen_pos[p]} and {v} coincide at {p}")
            break
        seen_pos[p] = v
    return out


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


def draw_onebend(g: EmbeddedGraph, check_steps: bool = True) -> PolylineDrawing:
    """1-bend, 4-slope, embedding-preserving drawing of a 3-connected cubic
    1-plane graph."""
    from .model import connectivity

    degs = g.degrees()
    if any(d != 3 for d in degs.values()):
        raise OneBendError("input must be cubic")
    if connectivity(g, cap=3) < 3:
        raise OneBendError("input must be 3-connected")
    norm = normalize_embedding(g)
    plane = norm.plane.copy()
    face, (tail, head), edge_id = find_real_real_face(plane)
    if set(face.darts) != set(plane.outer_face().darts):
        plane = plane.with_outer(face.darts[0])
    # The outer walk passes the base edge right-to-left, so the dart's head
    # is the left base vertex v1 and its tail the right one.
    delta = canonical_order(plane, head, tail)
    drawer = OneBendDrawer(plane, delta, check_steps=check_steps)
    gamma = drawer.run()
    return _finalize(norm, plane, gamma)


def _finalize(norm: EmbeddedGraph, plane: PlaneGraph, gamma: Gamma) -> PolylineDrawing:
    target = EmbeddedGraph.from_plane(plane)
    polylines: Dict[str, List[Point]] = {}
    for orig, (a, b) in sorted(target.edges.items()):
        pts = gamma._joined_original(orig)
        if pts is None:
            raise OneBendError(f"edge {orig} never drawn")
        if pts[0] != gamma.pos[a]:
            pts.reverse()
        polylines[orig] = _strip_collinear(pts)
    positions = {v: gamma.pos[v] for v in target.vertices}
    return PolylineDrawing(graph=target, positions=positions, polylines=polylines)


def _strip_collinear(pts: List[Point]) -> List[Point]:
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    pts = out
    cleaned = [pts[0]]
    for i in range(1, len(pts) - 1):
        a, b, c = cleaned[-1], pts[i], pts[i + 1]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        if cross == 0:
            continue
        cleaned.append(b)
    cleaned.append(pts[-1])
    return cleaned
