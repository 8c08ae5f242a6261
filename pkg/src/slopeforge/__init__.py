"""1-planar polyline drawings with few slopes and large resolution.

Drawers:
    draw_onebend -- 1 bend per edge, 4 slopes, resolution pi/4, for
                    3-connected cubic 1-plane graphs (embedding-preserving).
    draw_twobend -- 2 bends per edge, 2 slopes, right-angle crossings, for
                    subcubic 1-plane graphs.

Supporting machinery: embedding normalization (no dummy cutvertices),
canonical and st-orderings, lower-bound family generators, and an exact
rational validator.
"""

from .drawing import PolylineDrawing
from .model import EmbeddedGraph, PlaneGraph, connectivity, find_real_real_face, planarize
from .onebend import OneBendError, draw_onebend
from .ordering import canonical_order, st_order, verify_canonical
from .reembed import count_dummy_cutvertices, normalize_embedding
from .twobend import TwoBendError, draw_twobend
from .verify import ValidationReport, count_slopes, embedding_of, validate

__all__ = [
    "PolylineDrawing",
    "EmbeddedGraph",
    "PlaneGraph",
    "connectivity",
    "find_real_real_face",
    "planarize",
    "draw_onebend",
    "draw_twobend",
    "OneBendError",
    "TwoBendError",
    "canonical_order",
    "st_order",
    "verify_canonical",
    "normalize_embedding",
    "count_dummy_cutvertices",
    "ValidationReport",
    "count_slopes",
    "embedding_of",
    "validate",
]
