"""Polyline drawings with exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .geometry import Point, Segment
from .model import EmbeddedGraph


@dataclass
class PolylineDrawing:
    """Vertex positions plus a polyline (with optional bends) per edge.

    Polyline keys are the original edge ids of the source graph; each
    polyline runs from one endpoint's position to the other's, with the
    interior points being bends.  Consecutive points must be distinct.
    """

    graph: EmbeddedGraph
    positions: Dict[str, Point]
    polylines: Dict[str, List[Point]]

    def bends(self, edge_id: str) -> List[Point]:
        return self.polylines[edge_id][1:-1]

    def segments_of(self, edge_id: str) -> List[Segment]:
        pts = self.polylines[edge_id]
        return [Segment(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]

    def all_segments(self) -> List[Tuple[str, int, Segment]]:
        out: List[Tuple[str, int, Segment]] = []
        for e in sorted(self.polylines):
            for i, seg in enumerate(self.segments_of(e)):
                out.append((e, i, seg))
        return out

    def check_structure(self) -> List[str]:
        """Structural problems: missing endpoints, repeated points, etc."""
        problems: List[str] = []
        for v in self.graph.vertices:
            if v not in self.positions:
                problems.append(f"vertex {v} has no position")
        for e, (a, b) in sorted(self.graph.edges.items()):
            pts = self.polylines.get(e)
            if not pts or len(pts) < 2:
                problems.append(f"edge {e} has no polyline")
                continue
            if a in self.positions and b in self.positions:
                if {pts[0], pts[-1]} != {self.positions[a], self.positions[b]}:
                    problems.append(f"polyline of {e} does not join its endpoints")
            for i in range(len(pts) - 1):
                if pts[i] == pts[i + 1]:
                    problems.append(f"edge {e} has a zero-length segment")
                    break
        pos_list = sorted(self.positions.items())
        seen: Dict[Point, str] = {}
        for v, p in pos_list:
            if p in seen:
                problems.append(f"vertices {seen[p]} and {v} coincide at {p}")
            seen[p] = v
        return problems
