"""Combinatorial model of 1-plane graphs and their planarizations.

The primary structure is the planarization: a plane graph with a rotation
system, real/dummy vertex flags, and a fragment map sending each edge
incident to a dummy to the original edge it is half of.  A 1-planar
embedding is only unambiguous through its planarization, so input files
describe the planarization directly and the abstract 1-plane view
(vertices, edges, crossing pairs) is reconstructed from it.

Rotations are counterclockwise lists of edge ids.  A dart is a pair
(edge id, tail vertex); the face to the left of a dart is traced by the
rule next(u -> v) = the ccw-successor at v of the reversed dart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from . import graphutil

DUMMY_PREFIX = "_x"

Dart = Tuple[str, str]  # (edge id, tail vertex id)


class EmbeddingError(Exception):
    """Raised when data does not describe a consistent 1-plane embedding."""


@dataclass
class Face:
    """A face as the cyclic list of darts on its boundary."""

    darts: Tuple[Dart, ...]

    def vertices(self) -> List[str]:
        return [d[1] for d in self.darts]

    def __len__(self) -> int:
        return len(self.darts)

    def __contains__(self, vertex: str) -> bool:
        return any(d[1] == vertex for d in self.darts)


@dataclass
class PlaneGraph:
    """A plane graph with rotation system, vertex flags, and fragment map."""

    vertices: List[str]
    real: Set[str]
    edges: Dict[str, Tuple[str, str]]
    rotation: Dict[str, List[str]]
    fragment_of: Dict[str, str]
    outer_darts: Tuple[Dart, ...] = ()

    # ---- basic queries -------------------------------------------------

    def is_dummy(self, v: str) -> bool:
        return v not in self.real

    def other_end(self, edge_id: str, v: str) -> str:
        a, b = self.edges[edge_id]
        if v == a:
            return b
        if v == b:
            return a
        raise KeyError(f"{v} is not an endpoint of {edge_id}")

    def degree(self, v: str) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: str) -> List[str]:
        return [self.other_end(e, v) for e in self.rotation[v]]

    def adjacency(self) -> graphutil.Adj:
        return graphutil.adjacency(self.vertices, self.edges.values())

    def darts(self) -> List[Dart]:
        out = []
        for e, (a, b) in self.edges.items():
            out.append((e, a))
            out.append((e, b))
        return out

    def dart_head(self, d: Dart) -> str:
        return self.other_end(d[0], d[1])

    def rev(self, d: Dart) -> Dart:
        return (d[0], self.dart_head(d))

    def next_in_face(self, d: Dart) -> Dart:
        """Next dart of the face to the left of d (rotations are ccw)."""
        head = self.dart_head(d)
        rot = self.rotation[head]
        i = rot.index(d[0])
        nxt = rot[(i - 1) % len(rot)]
        return (nxt, head)

    def trace_face(self, start: Dart) -> Face:
        darts = [start]
        d = self.next_in_face(start)
        while d != start:
            darts.append(d)
            d = self.next_in_face(d)
            if len(darts) > 4 * len(self.edges) + 4:
                raise EmbeddingError("face trace does not close; rotation system broken")
        return Face(tuple(darts))

    def faces(self) -> List[Face]:
        seen: Set[Dart] = set()
        out: List[Face] = []
        for d in self.darts():
            if d in seen:
                continue
            f = self.trace_face(d)
            seen.update(f.darts)
            out.append(f)
        return out

    def outer_face(self) -> Face:
        if not self.outer_darts:
            raise EmbeddingError("no outer face recorded")
        return self.trace_face(self.outer_darts[0])

    def with_outer(self, dart: Dart) -> "PlaneGraph":
        g = self.copy()
        g.outer_darts = tuple(g.trace_face(dart).darts)
        return g

    def copy(self) -> "PlaneGraph":
        return PlaneGraph(
            vertices=list(self.vertices),
            real=set(self.real),
            edges=dict(self.edges),
            rotation={v: list(r) for v, r in self.rotation.items()},
            fragment_of=dict(self.fragment_of),
            outer_darts=tuple(self.outer_darts),
        )

    # ---- the original (abstract, 1-plane) view -------------------------

    def dummies(self) -> List[str]:
        return [v for v in self.vertices if v not in self.real]

    def original_edge_of(self, edge_id: str) -> str:
        return self.fragment_of.get(edge_id, edge_id)

    def original_edges(self) -> Dict[str, Tuple[str, str]]:
        """Original edge id -> (real endpoint, real endpoint)."""
        ends: Dict[str, List[str]] = {}
        for e, (a, b) in sorted(self.edges.items()):
            orig = self.original_edge_of(e)
            for v in (a, b):
                if v in self.real:
                    ends.setdefault(orig, []).append(v)
        out: Dict[str, Tuple[str, str]] = {}
        for orig, vs in ends.items():
            if len(vs) != 2:
                raise EmbeddingError(f"original edge {orig} has {len(vs)} real endpoints")
            out[orig] = (vs[0], vs[1])
        return out

    def crossing_pairs(self) -> Dict[str, Tuple[str, str]]:
        """Dummy id -> the unordered pair of original edge ids crossing there."""
        out: Dict[str, Tuple[str, str]] = {}
        for x in self.dummies():
            origs = sorted({self.original_edge_of(e) for e in self.rotation[x]})
            if len(origs) != 2:
                raise EmbeddingError(f"dummy {x} does not join exactly two original edges")
            out[x] = (origs[0], origs[1])
        return out

    def fragments_of_original(self, orig: str) -> List[str]:
        return sorted(e for e, o in self.fragment_of.items() if o == orig)

    # ---- validation -----------------------------------------------------

    def validate(self) -> None:
        vids = set(self.vertices)
        if len(vids) != len(self.vertices):
            raise EmbeddingError("duplicate vertex ids")
        if not self.real <= vids:
            raise EmbeddingError("real flag on unknown vertex")
        seen_pairs: Set[FrozenSet[str]] = set()
        for e, (a, b) in self.edges.items():
            if a == b:
                raise EmbeddingError(f"self-loop {e}")
            if a not in vids or b not in vids:
                raise EmbeddingError(f"edge {e} has unknown endpoint")
            pair = frozenset((a, b))
            if pair in seen_pairs:
                raise EmbeddingError(f"multi-edge between {a} and {b}")
            seen_pairs.add(pair)
        for v in self.vertices:
            rot = self.rotation.get(v)
            if rot is None:
                raise EmbeddingError(f"no rotation for {v}")
            incident = {e for e, ends in self.edges.items() if v in ends}
            if set(rot) != incident or len(rot) != len(incident):
                raise EmbeddingError(f"rotation at {v} does not list its incident edges")
        self._validate_dummies()
        self._validate_euler()
        if self.outer_darts:
            f = self.trace_face(self.outer_darts[0])
            if set(f.darts) != set(self.outer_darts):
                raise EmbeddingError("outer face record does not match traced face")

    def _validate_dummies(self) -> None:
        for x in self.dummies():
            rot = self.rotation[x]
            if len(rot) != 4:
                raise EmbeddingError(f"dummy {x} has degree {len(rot)}, expected 4")
            origs = [self.original_edge_of(e) for e in rot]
            if origs[0] != origs[2] or origs[1] != origs[3] or origs[0] == origs[1]:
                raise EmbeddingError(f"rotation at dummy {x} does not alternate its two edges")
            for e in rot:
                if e not in self.fragment_of:
                    raise EmbeddingError(f"edge {e} at dummy {x} is not a fragment")
                if self.is_dummy(self.other_end(e, x)):
                    raise EmbeddingError(f"edge {e} joins two dummies (edge crossed twice)")
        # Each original edge is covered by 0 or exactly 2 fragments.
        for orig in {o for o in self.fragment_of.values()}:
            frags = self.fragments_of_original(orig)
            if len(frags) != 2:
                raise EmbeddingError(f"original edge {orig} split into {len(frags)} fragments")
        self.original_edges()

    def _validate_euler(self) -> None:
        # Face orbits are traced per component, so each component contributes
        # its own copy of the unbounded face: V - E + F = 2C.
        n = len(self.vertices)
        m = len(self.edges)
        f = len(self.faces())
        c = len(graphutil.components(self.adjacency()))
        if n - m + f != 2 * c:
            raise EmbeddingError(
                f"Euler check failed: V={n} E={m} F={f} C={c} (V-E+F != 2C)"
            )


@dataclass
class EmbeddedGraph:
    """A 1-plane graph: the abstract graph together with its planarization."""

    plane: PlaneGraph
    original: Dict[str, Tuple[str, str]] = field(default_factory=dict)

    @staticmethod
    def from_plane(plane: PlaneGraph) -> "EmbeddedGraph":
        plane.validate()
        return EmbeddedGraph(plane=plane, original=plane.original_edges())

    @property
    def vertices(self) -> List[str]:
        return [v for v in self.plane.vertices if v in self.plane.real]

    @property
    def edges(self) -> Dict[str, Tuple[str, str]]:
        return self.original

    def crossings(self) -> Dict[str, Tuple[str, str]]:
        return self.plane.crossing_pairs()

    def abstract_adjacency(self) -> graphutil.Adj:
        return graphutil.adjacency(self.vertices, self.original.values())

    def degrees(self) -> Dict[str, int]:
        adj = self.abstract_adjacency()
        return {v: len(adj[v]) for v in adj}

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees().values())

    def is_subcubic(self) -> bool:
        return all(d <= 3 for d in self.degrees().values())

    def validate(self) -> None:
        self.plane.validate()


def planarize(g: EmbeddedGraph) -> PlaneGraph:
    """The plane graph obtained by replacing each crossing with a dummy.

    The model stores the planarization as primary data, so this validates
    and returns it.
    """
    g.validate()
    return g.plane


def faces(p: PlaneGraph) -> List[Face]:
    return p.faces()


def connectivity(adj_or_graph, cap: int = 4) -> int:
    """Vertex connectivity with the distinctions 0, 1, 2, 3, >=4."""
    if isinstance(adj_or_graph, EmbeddedGraph):
        adj = adj_or_graph.abstract_adjacency()
    elif isinstance(adj_or_graph, PlaneGraph):
        adj = adj_or_graph.adjacency()
    else:
        adj = adj_or_graph
    return graphutil.vertex_connectivity(adj, cap=cap)


def find_real_real_face(p: PlaneGraph) -> Tuple[Face, Tuple[str, str], str]:
    """A face with an edge joining two consecutive real vertices.

    Returns (face, (v1, v2), edge id).  Prefers the recorded outer face, then
    scans all faces in deterministic order.  For subcubic 1-plane input the
    counting argument guarantees existence; if nothing is found the input
    violates that invariant and an EmbeddingError is raised.
    """
    candidates: List[Face] = []
    if p.outer_darts:
        candidates.append(p.outer_face())
    candidates.extend(sorted(p.faces(), key=lambda f: tuple(sorted(d[0] for d in f.darts))))
    for face in candidates:
        best: Optional[Tuple[str, Tuple[str, str], Dart]] = None
        for d in face.darts:
            e, tail = d
            head = p.dart_head(d)
            if tail in p.real and head in p.real:
                if best is None or e < best[0]:
                    best = (e, (tail, head), d)
        if best is not None:
            return face, best[1], best[0]
    raise EmbeddingError("no face with two consecutive real vertices (input invariant violated)")


def build_plane_graph(
    real_vertices: Iterable[str],
    dummy_vertices: Iterable[str],
    edges: Dict[str, Tuple[str, str]],
    rotation: Dict[str, Sequence[str]],
    fragment_of: Dict[str, str],
    outer_dart: Optional[Dart] = None,
) -> PlaneGraph:
    reals = list(real_vertices)
    dummies = list(dummy_vertices)
    g = PlaneGraph(
        vertices=reals + dummies,
        real=set(reals),
        edges=dict(edges),
        rotation={v: list(r) for v, r in rotation.items()},
        fragment_of=dict(fragment_of),
    )
    if outer_dart is not None:
        g.outer_darts = tuple(g.trace_face(outer_dart).darts)
    g.validate()
    return g
