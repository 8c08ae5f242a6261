"""JSON documents: graphs (planarization form) and drawings.

Rationals serialize as [numerator, denominator] pairs; integers beyond
2**53 - 1 become base-10 strings so the values survive any JSON reader.
Serialization is canonical (sorted keys, fixed separators), so identical
objects produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .drawing import PolylineDrawing
from .geometry import Point
from .model import EmbeddedGraph, PlaneGraph

_BIG = 2**53 - 1


class DocumentError(Exception):
    pass


def _int_out(v: int):
    return v if abs(v) <= _BIG else str(v)


def _int_in(v) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise DocumentError(f"expected integer or string, got {v!r}")
    return int(v)


def _rat_out(q: Fraction):
    return [_int_out(q.numerator), _int_out(q.denominator)]


def _rat_in(v) -> Fraction:
    if not isinstance(v, list) or len(v) != 2:
        raise DocumentError(f"expected [numerator, denominator], got {v!r}")
    return Fraction(_int_in(v[0]), _int_in(v[1]))


# ---------------------------------------------------------------------------
# GraphDocument
# ---------------------------------------------------------------------------

GRAPH_FIELDS = {"version", "vertices", "edges", "rotations", "fragment_map", "outer_face"}


def graph_to_doc(g: EmbeddedGraph) -> Dict[str, Any]:
    plane = g.plane
    return {
        "version": 1,
        "vertices": [
            {"id": v, "real": v in plane.real} for v in sorted(plane.vertices)
        ],
        "edges": [
            {"id": e, "endpoints": list(plane.edges[e])} for e in sorted(plane.edges)
        ],
        "rotations": {v: list(plane.rotation[v]) for v in sorted(plane.vertices)},
        "fragment_map": _fragment_map_out(plane),
        "outer_face": [[e, tail] for e, tail in plane.outer_darts],
    }


def _fragment_map_out(plane: PlaneGraph) -> Dict[str, List[List[str]]]:
    out: Dict[str, List[List[str]]] = {}
    for x in sorted(plane.dummies()):
        out[x] = [
            [e, plane.fragment_of[e]]
            for e in plane.rotation[x]
        ]
    return out


def graph_from_doc(doc: Dict[str, Any], strict: bool = False) -> EmbeddedGraph:
    if not isinstance(doc, dict):
        raise DocumentError("graph document must be an object")
    if strict:
        unknown = set(doc) - GRAPH_FIELDS
        if unknown:
            raise DocumentError(f"unknown fields: {sorted(unknown)}")
    if doc.get("version") != 1:
        raise DocumentError("unsupported graph document version")
    try:
        vertices = [(v["id"], bool(v["real"])) for v in doc["vertices"]]
        edges = {e["id"]: (e["endpoints"][0], e["endpoints"][1]) for e in doc["edges"]}
        rotations = {v: list(r) for v, r in doc["rotations"].items()}
    except (KeyError, TypeError, IndexError) as exc:
        raise DocumentError(f"malformed graph document: {exc}")
    fragment_of: Dict[str, str] = {}
    for x, pairs in doc.get("fragment_map", {}).items():
        for frag, orig in pairs:
            fragment_of[frag] = orig
    outer = [tuple(d) for d in doc.get("outer_face", [])]
    plane = PlaneGraph(
        vertices=[v for v, _ in vertices],
        real={v for v, is_real in vertices if is_real},
        edges=edges,
        rotation=rotations,
        fragment_of=fragment_of,
    )
    if outer:
        plane.outer_darts = tuple(plane.trace_face(outer[0]).darts)
        if {tuple(d) for d in outer} != set(plane.outer_darts):
            raise DocumentError("outer_face does not describe a face of the rotation system")
    plane.validate()
    return EmbeddedGraph.from_plane(plane)


# ---------------------------------------------------------------------------
# DrawingDocument
# ---------------------------------------------------------------------------

DRAWING_FIELDS = {"version", "graph", "positions", "polylines"}


def drawing_to_doc(d: PolylineDrawing) -> Dict[str, Any]:
    return {
        "version": 1,
        "graph": graph_to_doc(d.graph),
        "positions": {
            v: [_rat_out(p.x), _rat_out(p.y)] for v, p in sorted(d.positions.items())
        },
        "polylines": {
            e: [[_rat_out(p.x), _rat_out(p.y)] for p in pts]
            for e, pts in sorted(d.polylines.items())
        },
    }


def drawing_from_doc(doc: Dict[str, Any], strict: bool = False) -> PolylineDrawing:
    if not isinstance(doc, dict):
        raise DocumentError("drawing document must be an object")
    if strict:
        unknown = set(doc) - DRAWING_FIELDS
        if unknown:
            raise DocumentError(f"unknown fields: {sorted(unknown)}")
    if doc.get("version") != 1:
        raise DocumentError("unsupported drawing document version")
    graph = graph_from_doc(doc["graph"], strict=strict)
    positions = {
        v: Point(_rat_in(xy[0]), _rat_in(xy[1])) for v, xy in doc["positions"].items()
    }
    polylines = {
        e: [Point(_rat_in(p[0]), _rat_in(p[1])) for p in pts]
        for e, pts in doc["polylines"].items()
    }
    return PolylineDrawing(graph=graph, positions=positions, polylines=polylines)


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str) -> Dict[str, Any]:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}")
