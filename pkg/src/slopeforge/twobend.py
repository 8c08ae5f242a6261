"""Orthogonal 2-bend drawings of subcubic 1-plane graphs (2 slopes, RAC).

Per biconnected piece, vertices go one per row in st-order and every edge
rises through a dedicated column, entering and leaving through ports
assigned from the embedding (outgoing N/E/W, incoming S/W/E).  That
realization produces only the I/L/C shape catalog and satisfies the
orthogonal invariants; C-shapes touching a dummy are then removed by
stretching along a curve hugging the real endpoint and rerouting, which
is what keeps every original edge within two bends after the crossing
dummies are replaced by crossing points.  Components are finally glued
along the bridge decomposition tree with quarter-turn rotations and
integer scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from . import graphutil
from .drawing import PolylineDrawing
from .geometry import Point
from .model import EmbeddedGraph, EmbeddingError, PlaneGraph
from .ordering import StOrdering, st_order
from .reembed import normalize_embedding

F = Fraction

OUT_PORTS = {1: ["N"], 2: ["N", "E"], 3: ["N", "E", "W"]}
IN_PORTS = {1: ["S"], 2: ["S", "W"], 3: ["S", "W", "E"]}
PORT_ANGLE = {"E": 0, "N": 1, "W": 2, "S": 3}  # ccw order


class TwoBendError(Exception):
    pass


@dataclass
class OrthoEdge:
    edge_id: str
    tail: str
    head: str
    out_port: str
    in_port: str
    points: List[Point]

    def shape(self) -> str:
        pair = (self.out_port, self.in_port)
        if pair == ("N", "S"):
            return "I"
        if pair in (("N", "W"), ("N", "E"), ("E", "S"), ("W", "S")):
            return "L"
        if pair in (("E", "E"), ("W", "W")):
            return "C"
        return "?"


@dataclass
class OrthoDrawing:
    plane: PlaneGraph
    sigma: Dict[str, int]
    s: str
    t: str
    pos: Dict[str, Point]
    edges: Dict[str, OrthoEdge]

    def port_use(self) -> Dict[Tuple[str, str], str]:
        use: Dict[Tuple[str, str], str] = {}
        for e in self.edges.values():
            use[(e.tail, e.out_port)] = e.edge_id
            use[(e.head, e.in_port)] = e.edge_id
        return use

    def ports_at(self, v: str) -> Dict[str, str]:
        out: Dict[str, str] = {}
        for e in self.edges.values():
            if e.tail == v:
                out[e.out_port] = e.edge_id
            if e.head == v:
                out[e.in_port] = e.edge_id
        return out


def _opposite(port: str) -> str:
    return {"N": "S", "S": "N", "E": "W", "W": "E"}[port]


# ---------------------------------------------------------------------------
# Port assignment from the embedding
# ---------------------------------------------------------------------------


def _edge_dir(plane: PlaneGraph, st: StOrdering, e: str) -> Tuple[str, str]:
    a, b = plane.edges[e]
    return (a, b) if st.sigma[a] < st.sigma[b] else (b, a)


def assign_ports(plane: PlaneGraph, st: StOrdering) -> Dict[str, Dict[str, str]]:
    """Spec-facing name for the embedding-pinned port assignment."""
    return compute_ports(plane, st)


def _variant_patterns(n_in: int, n_out: int) -> List[Tuple[List[str], List[str]]]:
    """(outs, ins) port patterns for a degree profile: the standard pattern
    and, where one exists, its left-right mirror."""
    base = (OUT_PORTS.get(n_out, []), IN_PORTS.get(n_in, []))
    variants = [base]
    mirror = {"E": "W", "W": "E", "N": "N", "S": "S"}
    m_outs = sorted((mirror[p] for p in base[0]), key=lambda p: PORT_ANGLE[p])
    m_ins = sorted((mirror[p] for p in base[1]), key=lambda p: PORT_ANGLE[p])
    if (m_outs, m_ins) != (sorted(base[0], key=lambda p: PORT_ANGLE[p]),
                           sorted(base[1], key=lambda p: PORT_ANGLE[p])):
        if not set(m_outs) & set(m_ins):
            variants.append((m_outs, m_ins))
    return variants


def compute_ports(plane: PlaneGraph, st: StOrdering) -> Dict[str, Dict[str, str]]:
    """Per vertex: edge id -> port, derived from the rotation.

    Outgoing edges use the N, E, W ports and incoming S, W, E (by count);
    which edge gets which port is pinned by matching the counterclockwise
    port order against the vertex rotation.  Each pattern also admits a
    left-right mirror; a 2-SAT instance picks per-vertex variants so that
    no edge becomes a Z-shape, no C-shape ends in a dummy on W ports, and
    none starts in a dummy on E ports.  Source/sink ambiguity is resolved
    so the free gap faces the outer face.
    """
    outer = set(plane.outer_darts)
    per_vertex: Dict[str, List[Dict[str, str]]] = {}
    for v in plane.vertices:
        rot = plane.rotation[v]
        flags = []
        for e in rot:
            tail, _ = _edge_dir(plane, st, e)
            flags.append("out" if tail == v else "in")
        n_out = flags.count("out")
        n_in = flags.count("in")
        if n_out > 3 or n_in > 3:
            raise TwoBendError(f"vertex {v} exceeds the supported degree pattern")
        options: List[Dict[str, str]] = []
        for outs, ins in _variant_patterns(n_in, n_out):
            ports_ccw = sorted(list(outs) + list(ins), key=lambda p: PORT_ANGLE[p])
            out_set = set(outs)
            want_flags = ["out" if p in out_set else "in" for p in ports_ccw]
            k = len(rot)
            matches = [
                off
                for off in range(k)
                if all(flags[(off + i) % k] == want_flags[i] for i in range(k))
            ]
            if not matches:
                continue
            chosen = matches[0]
            if len(matches) > 1:
                chosen = _disambiguate(plane, v, rot, matches, ports_ccw, outer)
            options.append({rot[(chosen + i) % k]: ports_ccw[i] for i in range(k)})
        if not options:
            raise TwoBendError(f"rotation at {v} is inconsistent with its in/out pattern")
        per_vertex[v] = options

    return _choose_variants(plane, st, per_vertex)


_BAD_PAIRS = {("E", "W"), ("W", "E")}  # Z-shapes


def _choose_variants(
    plane: PlaneGraph, st: StOrdering, per_vertex: Dict[str, List[Dict[str, str]]]
) -> Dict[str, Dict[str, str]]:
    """Pick a pattern variant per vertex via 2-SAT.

    Variable x_v is true when vertex v uses the mirrored pattern.  Every
    (tail variant, head variant) combination that would give an edge a
    Z-shape, a W-W C-shape into a dummy, or an E-E C-shape out of a dummy
    contributes a clause forbidding it.
    """
    names = sorted(v for v in per_vertex if len(per_vertex[v]) > 1)
    var_of = {v: i + 1 for i, v in enumerate(names)}
    clauses: List[Tuple[int, int]] = []

    def variant_literals(v: str) -> List[Tuple[int, int]]:
        # (variant index, literal that is true exactly in this variant).
        if v in var_of:
            return [(0, -var_of[v]), (1, var_of[v])]
        return [(0, 0)]

    for e in sorted(plane.edges):
        tail, head = _edge_dir(plane, st, e)
        for tvar, tlit in variant_literals(tail):
            for hvar, hlit in variant_literals(head):
                out_port = per_vertex[tail][tvar][e]
                in_port = per_vertex[head][hvar][e]
                bad = (out_port, in_port) in _BAD_PAIRS
                if (out_port, in_port) == ("W", "W") and plane.is_dummy(head):
                    bad = True
                if (out_port, in_port) == ("E", "E") and plane.is_dummy(tail):
                    bad = True
                if not bad:
                    continue
                if tlit == 0 and hlit == 0:
                    raise TwoBendError(f"edge {e} is forced into an illegal shape")
                if tlit == 0:
                    clauses.append((-hlit, -hlit))
                elif hlit == 0:
                    clauses.append((-tlit, -tlit))
                else:
                    clauses.append((-tlit, -hlit))

    solution = graphutil.two_sat(len(names), clauses)
    if solution is None:
        raise TwoBendError("no Z-free port variant assignment exists for this orientation")
    result: Dict[str, Dict[str, str]] = {}
    for v, options in per_vertex.items():
        if v in var_of and solution[var_of[v] - 1]:
            result[v] = options[1]
        else:
            result[v] = options[0]
    return result


def _disambiguate(plane, v, rot, matches, ports_ccw, outer) -> int:
    """Pick the rotation offset whose free gap faces the outer face."""
    k = len(rot)
    # The free gap sits between consecutive ccw ports with an angular hole
    # containing N (all-in vertex) or S (all-out).  With the ccw port list,
    # that's the wrap-around corner: between the last listed port's edge and
    # the first listed port's edge when the hole spans the wrap, otherwise
    # between the specific neighbors of the hole.
    hole = "N" if "N" not in ports_ccw else "S"
    order = sorted(ports_ccw + [hole], key=lambda p: PORT_ANGLE[p])
    hi = order.index(hole)
    before = order[hi - 1]
    i_before = ports_ccw.index(before)
    for off in matches:
        e_before = rot[(off + i_before) % k]
        face = plane.trace_face((e_before, v))
        if set(face.darts) == set(outer):
            return off
    return matches[0]


# ---------------------------------------------------------------------------
# Row-based drawing (the biconnected-case algorithm)
# ---------------------------------------------------------------------------


def draw_liu(plane: PlaneGraph, s: str, t: str) -> OrthoDrawing:
    """Orthogonal drawing of a biconnected planarized component.

    One row per st-rank; every edge rises in its own column; ports follow
    the embedding.  The result satisfies the orthogonal invariants, which
    the caller should verify with check_invariants.
    """
    adj = plane.adjacency()
    st = st_order(adj, s, t)
    ports = compute_ports(plane, st)
    order = st.order()
    rank = st.sigma

    pos: Dict[str, Point] = {}
    pending: List[Tuple[str, Fraction, List[Point]]] = []  # (edge, col, prefix)
    edges_out: Dict[str, OrthoEdge] = {}

    def stub_cols() -> List[Fraction]:
        return [c for _, c, _ in pending]

    for v in order:
        y = F(rank[v])
        rot_ports = ports[v]
        in_edges = [e for e, p in rot_ports.items() if p in ("S", "W", "E") and _edge_dir(plane, st, e)[1] == v]
        out_edges = [e for e, p in rot_ports.items() if _edge_dir(plane, st, e)[0] == v]
        if v == order[0]:
            x = F(0)
            pos[v] = Point(x, y)
        else:
            idxs = sorted(i for i, (e, _, _) in enumerate(pending) if e in in_edges)
            if not idxs or idxs != list(range(idxs[0], idxs[0] + len(idxs))):
                raise TwoBendError(f"incoming edges of {v} are not consecutive on the frontier")
            block = pending[idxs[0] : idxs[-1] + 1]
            by_port = {rot_ports[e]: (e, c, pre) for e, c, pre in block}
            want_order = [p for p in ("W", "S", "E") if p in by_port]
            if [rot_ports[e] for e, _, _ in block] != want_order:
                raise TwoBendError(f"frontier order at {v} does not match its port pattern")
            x = by_port["S"][1]
            pos[v] = Point(x, y)
            for e, c, pre in block:
                p = rot_ports[e]
                pts = list(pre)
                riser_top = Point(c, y)
                if pts[-1] != riser_top:
                    pts.append(riser_top)
                if p != "S":
                    pts.append(Point(x, y))
                tail, head = _edge_dir(plane, st, e)
                edges_out[e] = OrthoEdge(e, tail, head, _stub_port(pre, c), p, pts)
            del pending[idxs[0] : idxs[-1] + 1]
            insert_at = idxs[0]
        if v == order[0]:
            insert_at = 0
        # New stubs in frontier order W, N, E.
        left_bound = pending[insert_at - 1][1] if insert_at > 0 else x - 2
        right_bound = pending[insert_at][1] if insert_at < len(pending) else x + 2
        new_stubs: List[Tuple[str, Fraction, List[Point]]] = []
        out_by_port = {rot_ports[e]: e for e in out_edges}
        if "W" in out_by_port:
            col = (left_bound + x) / 2
            e = out_by_port["W"]
            new_stubs.append((e, col, [Point(x, y), Point(col, y)]))
        if "N" in out_by_port:
            e = out_by_port["N"]
            new_stubs.append((e, x, [Point(x, y)]))
        if "E" in out_by_port:
            col = (x + right_bound) / 2
            e = out_by_port["E"]
            new_stubs.append((e, col, [Point(x, y), Point(col, y)]))
        pending[insert_at:insert_at] = new_stubs

    if pending:
        raise TwoBendError("frontier not empty after the sink was placed")

    d = OrthoDrawing(plane=plane, sigma=dict(rank), s=s, t=t, pos=pos, edges=edges_out)
    _compact(d)
    return d


def _stub_port(prefix: List[Point], col: Fraction) -> str:
    if len(prefix) == 1:
        return "N"
    return "E" if prefix[1].x > prefix[0].x else "W"


def _compact(d: OrthoDrawing) -> None:
    """Renumber x-coordinates onto consecutive integers, preserving order."""
    xs: Set[Fraction] = set()
    for p in d.pos.values():
        xs.add(p.x)
    for e in d.edges.values():
        for p in e.points:
            xs.add(p.x)
    remap = {x: F(i) for i, x in enumerate(sorted(xs))}
    for v in list(d.pos):
        p = d.pos[v]
        d.pos[v] = Point(remap[p.x], p.y)
    for e in d.edges.values():
        e.points = [Point(remap[p.x], p.y) for p in e.points]
        _dedup_collinear(e)


def _dedup_collinear(e: OrthoEdge) -> None:
    pts = e.points
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    pts = out
    cleaned = [pts[0]]
    for i in range(1, len(pts) - 1):
        a, b, c = cleaned[-1], pts[i], pts[i + 1]
        if (a.x == b.x == c.x) or (a.y == b.y == c.y):
            continue
        cleaned.append(b)
    cleaned.append(pts[-1])
    e.points = cleaned


# ---------------------------------------------------------------------------
# Invariant checker (I1) - (I6)
# ---------------------------------------------------------------------------


def check_invariants(d: OrthoDrawing, require_all: bool = True) -> List[str]:
    problems: List[str] = []
    # I1a: orthogonal segments and catalog shapes.
    for e in d.edges.values():
        pts = e.points
        for i in range(len(pts) - 1):
            if pts[i].x != pts[i + 1].x and pts[i].y != pts[i + 1].y:
                problems.append(f"I1: {e.edge_id} has a non-orthogonal segment")
        if e.shape() == "?":
            problems.append(f"I1: {e.edge_id} uses ports {e.out_port}->{e.in_port} outside the catalog")
        if pts[0] != d.pos[e.tail] or pts[-1] != d.pos[e.head]:
            problems.append(f"I1: {e.edge_id} does not join its endpoints")
    # I1b: planarity of the component drawing.
    problems.extend(_planarity_problems(d))
    # I2: t on the outer face with a free N port.
    top = max(p.y for p in d.pos.values())
    if d.pos[d.t].y != top:
        problems.append("I2: the sink is not topmost")
    if "N" in d.ports_at(d.t):
        problems.append("I2: the sink's N port is not free")
    # I3: y-monotone from source to target.
    for e in d.edges.values():
        ys = [p.y for p in e.points]
        if any(b < a for a, b in zip(ys, ys[1:])):
            problems.append(f"I3: {e.edge_id} is not y-monotone")
    # I4: bends.
    for e in d.edges.values():
        bends = len(e.points) - 2
        if bends > 2:
            problems.append(f"I4: {e.edge_id} has {bends} bends")
        if bends == 2 and e.shape() != "C":
            problems.append(f"I4: {e.edge_id} has 2 bends but is no C-shape")
    # I5 / I6.
    for e in d.edges.values():
        if e.shape() != "C":
            continue
        if d.plane.is_dummy(e.head) and (e.out_port, e.in_port) != ("E", "E"):
            problems.append(f"I5: C-shape {e.edge_id} into dummy {e.head} not on E ports")
        if d.plane.is_dummy(e.tail) and (e.out_port, e.in_port) != ("W", "W"):
            problems.append(f"I6: C-shape {e.edge_id} out of dummy {e.tail} not on W ports")
    # Crossing validity: same-edge fragments occupy opposite ports at dummies.
    for x in d.plane.dummies():
        at = d.ports_at(x)
        by_orig: Dict[str, List[str]] = {}
        for port, e in at.items():
            by_orig.setdefault(d.plane.original_edge_of(e), []).append(port)
        for orig, ps in by_orig.items():
            if len(ps) == 2 and _opposite(ps[0]) != ps[1]:
                problems.append(f"fragments of {orig} not at opposite ports of {x}")
        # Rotation preserved at the crossing.
        want = [d.plane.rotation[x][i] for i in range(len(d.plane.rotation[x]))]
        drawn = [at[p] for p in ("E", "N", "W", "S") if p in at]
        if len(drawn) == 4 and not _cyclic_equal(want, drawn):
            problems.append(f"rotation at dummy {x} not preserved")
    return problems


def _cyclic_equal(a: List[str], b: List[str]) -> bool:
    if len(a) != len(b):
        return False
    return any(a == b[i:] + b[:i] for i in range(len(b)))


def _planarity_problems(d: OrthoDrawing) -> List[str]:
    from .geometry import IntersectKind, Segment, intersect

    segs: List[Tuple[str, int, Segment]] = []
    for eid in sorted(d.edges):
        pts = d.edges[eid].points
        for i in range(len(pts) - 1):
            segs.append((eid, i, Segment(pts[i], pts[i + 1])))
    problems = []
    for i in range(len(segs)):
        e1, i1, s1 = segs[i]
        for j in range(i + 1, len(segs)):
            e2, i2, s2 = segs[j]
            b1, b2 = s1.bbox(), s2.bbox()
            if b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1]:
                continue
            res = intersect(s1, s2)
            if res.kind is IntersectKind.DISJOINT:
                continue
            if e1 == e2 and abs(i1 - i2) == 1 and res.kind is IntersectKind.SHARED_ENDPOINT:
                continue
            if e1 != e2 and res.kind is IntersectKind.SHARED_ENDPOINT:
                ea, eb = d.edges[e1], d.edges[e2]
                shared = {ea.tail, ea.head} & {eb.tail, eb.head}
                if any(d.pos[v] == res.point for v in shared):
                    continue
            problems.append(f"I1: {e1} and {e2} intersect ({res.kind.value})")
    return problems


# ---------------------------------------------------------------------------
# Stretching along a y-monotone staircase curve
# ---------------------------------------------------------------------------


@dataclass
class Staircase:
    """An increasing y-monotone orthogonal curve: vertical at xs[i] between
    ys[i-1] and ys[i], horizontal jogs at ys[i] from xs[i] to xs[i+1]."""

    xs: List[Fraction]
    ys: List[Fraction]

    def threshold(self, y: Fraction) -> Fraction:
        for j, jog_y in enumerate(self.ys):
            if y < jog_y:
                return self.xs[j]
        return self.xs[-1]

    def right_of(self, p: Point) -> bool:
        return p.x > self.threshold(p.y)

    def hits_vertex(self, d: "OrthoDrawing") -> bool:
        for p in d.pos.values():
            if p.x == self.threshold(p.y):
                return True
            for j, jy in enumerate(self.ys):
                if p.y == jy and self.xs[j] <= p.x <= self.xs[j + 1]:
                    return True
        return False


def stretch_curve(d: OrthoDrawing, curve: Staircase, delta: Fraction) -> None:
    """Move the curve and everything right of it rightward by delta.

    Crossed vertical segments gain a horizontal run at the jog height;
    crossed horizontal segments just get longer.  Planarity, shapes of
    untouched edges, and y-monotonicity are preserved.
    """
    if delta <= 0:
        raise ValueError("stretch amount must be positive")
    if curve.hits_vertex(d):
        raise TwoBendError("stretch curve passes through a vertex")
    for v in list(d.pos):
        p = d.pos[v]
        if curve.right_of(p):
            d.pos[v] = Point(p.x + delta, p.y)
    for e in d.edges.values():
        new_pts: List[Point] = []
        pts = e.points
        for i, p in enumerate(pts):
            if new_pts and pts[i - 1].x == p.x:
                # Vertical segment: insert a run at every jog it crosses.
                prev = pts[i - 1]
                jogs = [jy for jy in curve.ys if min(prev.y, p.y) < jy < max(prev.y, p.y)]
                jogs.sort(reverse=prev.y > p.y)
                for jy in jogs:
                    below = curve.right_of(Point(p.x, min(prev.y, p.y)))
                    above = curve.right_of(Point(p.x, max(prev.y, p.y)))
                    if below == above:
                        continue
                    below_pt = Point(p.x + (delta if below else 0), jy)
                    above_pt = Point(p.x + (delta if above else 0), jy)
                    if prev.y < p.y:
                        new_pts.extend([below_pt, above_pt])
                    else:
                        new_pts.extend([above_pt, below_pt])
            new_pts.append(Point(p.x + delta, p.y) if curve.right_of(p) else p)
        dedup: List[Point] = []
        for p in new_pts:
            if not dedup or p != dedup[-1]:
                dedup.append(p)
        e.points = dedup


# ---------------------------------------------------------------------------
# C-shape elimination (the biconnected-case cleanup)
# ---------------------------------------------------------------------------


def dummy_c_shapes(d: OrthoDrawing) -> List[str]:
    out = []
    for eid in sorted(d.edges):
        e = d.edges[eid]
        if e.shape() == "C" and (d.plane.is_dummy(e.tail) or d.plane.is_dummy(e.head)):
            out.append(eid)
    return out


def eliminate_cshapes(d: OrthoDrawing, check_each_step: bool = True) -> int:
    """Remove every C-shape incident to a dummy, maintaining the invariants.

    Returns the number of elimination steps performed.  Raises TwoBendError
    with diagnostics when an unhandled port configuration appears.
    """
    steps = 0
    guard = 4 * len(d.edges) + 8
    while True:
        targets = dummy_c_shapes(d)
        if not targets:
            return steps
        if steps > guard:
            raise TwoBendError("C-shape elimination stopped making progress")
        eid = targets[0]
        e = d.edges[eid]
        if d.plane.is_dummy(e.head) and not d.plane.is_dummy(e.tail):
            _eliminate_into_dummy(d, eid)
        elif d.plane.is_dummy(e.tail) and not d.plane.is_dummy(e.head):
            _flip_180(d)
            try:
                _eliminate_into_dummy(d, eid)
            finally:
                _flip_180(d)
        else:
            raise TwoBendError(f"C-shape {eid} joins two dummies (impossible fragment)")
        _compact(d)
        steps += 1
        if check_each_step:
            problems = check_invariants(d)
            if problems:
                raise TwoBendError(
                    f"invariants broken after eliminating {eid}: {problems[:3]}"
                )


def _flip_180(d: OrthoDrawing) -> None:
    """Point-reflect the drawing; sources and sinks swap roles."""
    n = len(d.sigma) + 1
    d.sigma = {v: n - r for v, r in d.sigma.items()}
    d.s, d.t = d.t, d.s
    for v in list(d.pos):
        p = d.pos[v]
        d.pos[v] = Point(-p.x, -p.y)
    for e in d.edges.values():
        e.points = [Point(-p.x, -p.y) for p in reversed(e.points)]
        e.tail, e.head = e.head, e.tail
        e.out_port, e.in_port = _opposite(e.in_port), _opposite(e.out_port)


def _eliminate_into_dummy(d: OrthoDrawing, eid: str) -> None:
    """Handle a C-shape from a real vertex u into a dummy v (E->E ports)."""
    e = d.edges[eid]
    u, v = e.tail, e.head
    if (e.out_port, e.in_port) != ("E", "E"):
        raise TwoBendError(f"dummy-incident C {eid} uses ports {e.out_port}->{e.in_port}")
    at_u = d.ports_at(u)
    rc = max(p.x for p in e.points)  # the riser column of the C
    xu, yu = d.pos[u].x, d.pos[u].y

    if "N" not in at_u:
        curve = Staircase(xs=[xu - F(1, 2), rc + F(1, 2)], ys=[yu + F(1, 2)])
        stretch_curve(d, curve, rc - xu)
        xu2 = d.pos[u].x
        yv = d.pos[v].y
        e.points = [Point(xu2, yu), Point(xu2, yv), d.pos[v]]
        e.out_port = "N"
        _dedup_collinear(e)
        return

    # N occupied: free it by moving its edge to the W port, then reroute.
    blocker = at_u["N"]
    be = d.edges[blocker]
    if be.tail != u:
        raise TwoBendError(f"N port of real vertex {u} is used by an incoming edge")
    if "W" in at_u:
        raise TwoBendError(
            f"cannot eliminate {eid}: N and W of {u} both busy "
            f"(ports {sorted(at_u)})"
        )
    if be.in_port == "W" and d.plane.is_dummy(be.head):
        raise TwoBendError(
            f"cannot eliminate {eid}: rerouting {blocker} would make a W-C into a dummy"
        )
    if be.in_port == "E":
        raise TwoBendError(
            f"cannot eliminate {eid}: blocker {blocker} enters its head at E"
        )
    curve = Staircase(xs=[xu - F(1, 2), rc + F(1, 2)], ys=[yu + F(1, 2)])
    stretch_curve(d, curve, rc - xu)
    xu2 = d.pos[u].x
    yv = d.pos[v].y
    # Reroute the C through N.
    e.points = [Point(xu2, yu), Point(xu2, yv), d.pos[v]]
    e.out_port = "N"
    _dedup_collinear(e)
    # Reroute the blocker through W along u's old (now vacated) column.
    rest = [p for p in be.points if p.y > yu + F(1, 2)]
    if not rest or rest[0].x != xu:
        raise TwoBendError(f"blocker {blocker} lost its riser during the stretch")
    be.points = [Point(xu2, yu), Point(xu, yu)] + rest
    be.out_port = "W"
    _dedup_collinear(be)


# ---------------------------------------------------------------------------
# Bridge decomposition and assembly
# ---------------------------------------------------------------------------


@dataclass
class BridgeTree:
    components: List[Set[str]]           # real vertex sets
    bridges: List[Tuple[str, str]]       # abstract bridge edges (a, b)
    root: int
    parent: Dict[int, Tuple[int, str, str]]  # comp -> (parent comp, v_i, u_j)
    attach: Dict[int, str]               # comp -> u_i

    def order(self) -> List[int]:
        out = [self.root]
        seen = {self.root}
        while len(out) < len(self.components):
            for i in range(len(self.components)):
                if i in seen or i not in self.parent:
                    continue
                if self.parent[i][0] in seen:
                    out.append(i)
                    seen.add(i)
        return out


def bridge_decomposition(g: EmbeddedGraph) -> BridgeTree:
    adj = g.abstract_adjacency()
    bridges = sorted(tuple(sorted(b)) for b in graphutil.bridges(adj))
    comps = sorted(
        (sorted(c) for c in graphutil.two_edge_connected_components(adj)),
        key=lambda c: c[0],
    )
    comp_sets = [set(c) for c in comps]
    comp_of = {v: i for i, c in enumerate(comp_sets) for v in c}
    root = 0
    parent: Dict[int, Tuple[int, str, str]] = {}
    attach: Dict[int, str] = {root: sorted(comp_sets[root])[0]}
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for i in frontier:
            for a, b in bridges:
                for (va, ub) in ((a, b), (b, a)):
                    j = comp_of[ub]
                    if comp_of[va] == i and j not in seen:
                        parent[j] = (i, va, ub)
                        attach[j] = ub
                        seen.add(j)
                        nxt.append(j)
        frontier = nxt
    if len(seen) != len(comp_sets):
        raise TwoBendError("bridge decomposition did not reach every component")
    return BridgeTree(comp_sets, bridges, root, parent, attach)


def component_plane(g: EmbeddedGraph, comp: Set[str], u_i: str) -> PlaneGraph:
    """Induced planarization of one 2-edge-connected component, with an
    outer face containing the attachment vertex."""
    plane = g.plane
    dummies = set()
    for x, (e1, e2) in g.crossings().items():
        ends = set(g.edges[e1]) | set(g.edges[e2])
        if ends <= comp:
            dummies.add(x)
        elif ends & comp:
            raise TwoBendError("a crossing spans two components (input not normalized)")
    keep = comp | dummies
    edges = {
        e: ab
        for e, ab in plane.edges.items()
        if ab[0] in keep and ab[1] in keep
        and set(g.edges[plane.original_edge_of(e)]) <= comp
    }
    rotation = {v: [e for e in plane.rotation[v] if e in edges] for v in keep}
    sub = PlaneGraph(
        vertices=sorted(keep),
        real=set(comp),
        edges=edges,
        rotation=rotation,
        fragment_of={e: o for e, o in plane.fragment_of.items() if e in edges},
    )
    if len(sub.vertices) == 1:
        return sub
    sub.outer_darts = tuple(_outer_candidates(sub, u_i)[0])
    sub.validate()
    return sub


def _outer_candidates(sub: PlaneGraph, u_i: str) -> List[Tuple]:
    """Faces containing u_i, most real vertices first (ties by dart id)."""
    scored = []
    for face in sub.faces():
        if u_i in face:
            reals = len({v for v in face.vertices() if v in sub.real})
            scored.append((-reals, min(face.darts), face.darts))
    scored.sort()
    return [darts for _, _, darts in scored]


def draw_component(sub: PlaneGraph, u_i: str, check_steps: bool = True) -> OrthoDrawing:
    """Draw one component with t = u_i: tries source candidates until the
    invariant checker accepts the drawing."""
    if len(sub.vertices) == 1:
        v = sub.vertices[0]
        return OrthoDrawing(
            plane=sub, sigma={v: 1}, s=v, t=v, pos={v: Point(F(0), F(0))}, edges={}
        )
    errors = []
    for face_darts in _outer_candidates(sub, u_i):
        work = sub.copy()
        work.outer_darts = tuple(face_darts)
        outer = work.outer_face().vertices()
        candidates = sorted({v for v in outer if v in work.real and v != u_i})
        for s in candidates:
            try:
                d = draw_liu(work, s, u_i)
            except (TwoBendError, EmbeddingError, ValueError) as exc:
                errors.append(f"s={s}: {exc}")
                continue
            problems = check_invariants(d)
            if problems:
                errors.append(f"s={s}: {problems[:2]}")
                continue
            try:
                eliminate_cshapes(d, check_each_step=check_steps)
            except TwoBendError as exc:
                errors.append(f"s={s}: {exc}")
                continue
            if dummy_c_shapes(d):
                errors.append(f"s={s}: dummy C-shapes survived")
                continue
            return d
    raise TwoBendError(f"no source candidate worked for component at {u_i}: {errors}")


ROT = {
    0: lambda p: p,
    90: lambda p: Point(-p.y, p.x),
    180: lambda p: Point(-p.x, -p.y),
    270: lambda p: Point(p.y, -p.x),
}
PORT_ROT = {0: {}, 90: {"N": "W", "W": "S", "S": "E", "E": "N"},
            180: {"N": "S", "S": "N", "E": "W", "W": "E"},
            270: {"N": "E", "E": "S", "S": "W", "W": "N"}}
PORT_ROT[0] = {p: p for p in "NSEW"}
DIR = {"N": (0, 1), "S": (0, -1), "E": (1, 0), "W": (-1, 0)}


@dataclass
class Assembled:
    pos: Dict[str, Point]
    polylines: Dict[str, List[Point]]     # planarization-level edges
    used_ports: Dict[str, Set[str]]       # real vertex -> used ports


def assemble(
    drawings: Dict[int, OrthoDrawing],
    tree: BridgeTree,
    bridge_ids: Dict[Tuple[str, str], str],
) -> Assembled:
    """Glue per-component drawings along the bridge tree.

    Children are rotated by quarter turns so the attachment vertex's free N
    port faces its parent, the parent drawing is scaled by an integer large
    enough to open a pocket, and the bridge becomes a unit segment.
    """
    out = Assembled({}, {}, {})

    def add_component(i: int, transform, theta: int) -> None:
        d = drawings[i]
        for v, p in d.pos.items():
            if v in d.plane.real:
                out.pos[v] = transform(p)
        for e in d.edges.values():
            out.polylines[e.edge_id] = [transform(p) for p in e.points]
        for v in d.plane.real:
            rotated = {PORT_ROT[theta][p] for p in d.ports_at(v)}
            out.used_ports.setdefault(v, set()).update(rotated)

    def scale_all(k: int) -> None:
        for v in list(out.pos):
            p = out.pos[v]
            out.pos[v] = Point(p.x * k, p.y * k)
        for e in list(out.polylines):
            out.polylines[e] = [Point(p.x * k, p.y * k) for p in out.polylines[e]]

    order = tree.order()
    add_component(order[0], lambda p: p, 0)
    for i in order[1:]:
        parent_comp, v_i, u_j = tree.parent[i]
        d = drawings[i]
        used = out.used_ports.get(v_i, set())
        free = [p for p in ("N", "E", "W", "S") if p not in used]
        if not free:
            raise TwoBendError(f"no free port at {v_i} for a bridge (degree > 4?)")
        port = free[0]
        # Rotate the child so its free N port points back toward v_i.
        theta = {"E": 90, "N": 180, "W": 270, "S": 0}[port]
        rot = ROT[theta]
        child_pts = [rot(d.pos[v]) for v in d.pos]
        for e in d.edges.values():
            child_pts.extend(rot(p) for p in e.points)
        w = max(p.x for p in child_pts) - min(p.x for p in child_pts)
        h = max(p.y for p in child_pts) - min(p.y for p in child_pts)
        k = int(2 * (w + h) + 8)
        scale_all(k)
        base = out.pos[v_i]
        dx, dy = DIR[port]
        target = Point(base.x + dx, base.y + dy)
        anchor = rot(d.pos[u_j])
        shift = (target.x - anchor.x, target.y - anchor.y)

        def transform(p, rot=rot, shift=shift):
            q = rot(p)
            return Point(q.x + shift[0], q.y + shift[1])

        add_component(i, transform, theta)
        out.polylines[bridge_ids[(v_i, u_j)]] = [base, target]
        out.used_ports.setdefault(v_i, set()).add(port)
        out.used_ports.setdefault(u_j, set()).add(PORT_ROT[theta]["N"])
    return out


def draw_twobend(g: EmbeddedGraph, check_steps: bool = False) -> PolylineDrawing:
    """2-bend orthogonal drawing of a subcubic 1-plane graph."""
    if not g.is_subcubic():
        raise TwoBendError("input must be subcubic")
    adj = g.abstract_adjacency()
    if not graphutil.is_connected(adj):
        raise TwoBendError("input must be connected")
    norm = normalize_embedding(g)
    tree = bridge_decomposition(norm)
    bridge_ids: Dict[Tuple[str, str], str] = {}
    bridge_set = {tuple(sorted(x)) for x in tree.bridges}
    for e, (a, b) in norm.edges.items():
        if tuple(sorted((a, b))) in bridge_set:
            bridge_ids[(a, b)] = e
            bridge_ids[(b, a)] = e
    drawings: Dict[int, OrthoDrawing] = {}
    for i, comp in enumerate(tree.components):
        sub = component_plane(norm, comp, tree.attach[i])
        drawings[i] = draw_component(sub, tree.attach[i], check_steps=check_steps)
    assembled = assemble(drawings, tree, bridge_ids)

    # Join fragments through dummies into original-edge polylines.
    polylines: Dict[str, List[Point]] = {}
    for orig, (a, b) in sorted(norm.edges.items()):
        frags = norm.plane.fragments_of_original(orig)
        if not frags:
            pts = list(assembled.polylines[orig])
            if pts[0] != assembled.pos[a]:
                pts.reverse()
            polylines[orig] = pts
        else:
            fa = next(f for f in frags if a in norm.plane.edges[f])
            fb = next(f for f in frags if f != fa)
            pa = list(assembled.polylines[fa])
            pb = list(assembled.polylines[fb])
            if pa[0] != assembled.pos[a]:
                pa.reverse()
            if pb[-1] != assembled.pos[b]:
                pb.reverse()
            if pa[-1] != pb[0]:
                raise TwoBendError(f"fragments of {orig} do not meet at their crossing")
            joined = pa + pb[1:]
            polylines[orig] = _strip_collinear(joined)
    positions = {v: assembled.pos[v] for v in norm.vertices}
    return PolylineDrawing(graph=norm, positions=positions, polylines=polylines)


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
        dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)
        if cross == 0 and dot > 0:
            continue
        cleaned.append(b)
    cleaned.append(pts[-1])
    return cleaned
