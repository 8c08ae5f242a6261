"""Exact rational plane geometry.

Everything in this package lives on exact rational coordinates.  The four
canonical slopes (0, pi/4, pi/2, 3pi/4 with the x-axis) are closed under
line intersection on rational points, so no rounding is ever needed and
angle/resolution claims can be decided by sign tests instead of epsilons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

Rat = Fraction
RatLike = Union[int, str, Fraction]


def rat(value: RatLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RatLike, y: RatLike) -> "Point":
        return Point(rat(x), rat(y))

    def shifted(self, dx: RatLike, dy: RatLike = 0) -> "Point":
        return Point(self.x + rat(dx), self.y + rat(dy))

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


# A direction is a non-zero rational vector (dx, dy).
Direction = Tuple[Fraction, Fraction]


def direction(a: Point, b: Point) -> Direction:
    if a == b:
        raise ValueError("zero direction between coincident points")
    return (b.x - a.x, b.y - a.y)


def primitive(d: Direction) -> Tuple[int, int]:
    """Reduce a rational vector to a primitive integer vector, keeping its sign."""
    dx, dy = d
    if dx == 0 and dy == 0:
        raise ValueError("zero direction has no primitive form")
    scale = Fraction(math.lcm(dx.denominator, dy.denominator))
    ix, iy = int(dx * scale), int(dy * scale)
    g = math.gcd(abs(ix), abs(iy))
    return ix // g, iy // g


class SlopeKind(Enum):
    DEG0 = "0"
    DEG45 = "pi/4"
    DEG90 = "pi/2"
    DEG135 = "3pi/4"
    OTHER = "other"


# The slope set used by the 1-bend drawer, in angular order.
CANONICAL_SLOPES = (SlopeKind.DEG0, SlopeKind.DEG45, SlopeKind.DEG90, SlopeKind.DEG135)


@dataclass(frozen=True)
class Slope:
    """Slope of a line: direction and reverse direction are identical."""

    kind: SlopeKind
    # Primitive integer vector normalized so that (x > 0) or (x == 0 and y > 0).
    vec: Tuple[int, int]

    @staticmethod
    def of_direction(d: Direction) -> "Slope":
        ix, iy = primitive(d)
        if ix < 0 or (ix == 0 and iy < 0):
            ix, iy = -ix, -iy
        if iy == 0:
            kind = SlopeKind.DEG0
        elif ix == 0:
            kind = SlopeKind.DEG90
        elif ix == iy:
            kind = SlopeKind.DEG45
        elif ix == -iy:
            kind = SlopeKind.DEG135
        else:
            kind = SlopeKind.OTHER
        return Slope(kind, (ix, iy))

    @property
    def canonical(self) -> bool:
        return self.kind is not SlopeKind.OTHER


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")

    def dir(self) -> Direction:
        return direction(self.a, self.b)

    def bbox(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            min(self.a.x, self.b.x),
            min(self.a.y, self.b.y),
            max(self.a.x, self.b.x),
            max(self.a.y, self.b.y),
        )


def slope_of(seg: Segment) -> Slope:
    return Slope.of_direction(seg.dir())


def cross(d1: Direction, d2: Direction) -> Fraction:
    return d1[0] * d2[1] - d1[1] * d2[0]


def dot(d1: Direction, d2: Direction) -> Fraction:
    return d1[0] * d2[0] + d1[1] * d2[1]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle (a, b, c): 1 ccw, -1 cw, 0 collinear."""
    v = cross(direction(a, b), (c.x - a.x, c.y - a.y))
    return (v > 0) - (v < 0)


def on_segment(p: Point, seg: Segment) -> bool:
    """Exact containment of p in the closed segment."""
    if p == seg.a or p == seg.b:
        return True
    if orient(seg.a, seg.b, p) != 0:
        return False
    lo_x, lo_y, hi_x, hi_y = seg.bbox()
    return lo_x <= p.x <= hi_x and lo_y <= p.y <= hi_y


class IntersectKind(Enum):
    DISJOINT = "disjoint"
    SHARED_ENDPOINT = "shared_endpoint"
    PROPER_CROSSING = "proper_crossing"
    TOUCH = "touch"  # one segment's endpoint interior to the other
    OVERLAP = "overlap"


@dataclass(frozen=True)
class Intersection:
    kind: IntersectKind
    point: Optional[Point] = None


def line_intersection(p: Point, d1: Direction, q: Point, d2: Direction) -> Optional[Point]:
    """Intersection of two lines given by point + direction; None if parallel."""
    den = cross(d1, d2)
    if den == 0:
        return None
    t = cross((q.x - p.x, q.y - p.y), d2) / den
    return Point(p.x + t * d1[0], p.y + t * d1[1])


def intersect(s1: Segment, s2: Segment) -> Intersection:
    """Exact classification of the intersection of two segments.

    TOUCH (an endpoint of one segment interior to the other) is reported
    separately from SHARED_ENDPOINT so the validator can flag non-simple
    drawings precisely.
    """
    d1, d2 = s1.dir(), s2.dir()
    if cross(d1, d2) == 0:
        # Parallel: either collinear or disjoint.
        if orient(s1.a, s1.b, s2.a) != 0:
            return Intersection(IntersectKind.DISJOINT)
        pts = sorted([s1.a, s1.b])
        qts = sorted([s2.a, s2.b])
        lo, hi = max(pts[0], qts[0]), min(pts[1], qts[1])
        if lo > hi:
            return Intersection(IntersectKind.DISJOINT)
        if lo == hi:
            if lo in (s1.a, s1.b) and lo in (s2.a, s2.b):
                return Intersection(IntersectKind.SHARED_ENDPOINT, lo)
            return Intersection(IntersectKind.TOUCH, lo)
        return Intersection(IntersectKind.OVERLAP)
    p = line_intersection(s1.a, d1, s2.a, d2)
    assert p is not None
    if not (on_segment(p, s1) and on_segment(p, s2)):
        return Intersection(IntersectKind.DISJOINT)
    end1 = p in (s1.a, s1.b)
    end2 = p in (s2.a, s2.b)
    if end1 and end2:
        return Intersection(IntersectKind.SHARED_ENDPOINT, p)
    if end1 or end2:
        return Intersection(IntersectKind.TOUCH, p)
    return Intersection(IntersectKind.PROPER_CROSSING, p)


# ---------------------------------------------------------------------------
# Angles.  Directions on canonical slopes have octant indices 0..7 counting
# counterclockwise from east; the angle between two such directions is an
# exact multiple of pi/4.  General directions are compared by sign tests.
# ---------------------------------------------------------------------------

_OCTANTS = {
    (1, 0): 0,
    (1, 1): 1,
    (0, 1): 2,
    (-1, 1): 3,
    (-1, 0): 4,
    (-1, -1): 5,
    (0, -1): 6,
    (1, -1): 7,
}


def octant(d: Direction) -> Optional[int]:
    """Octant 0..7 of a canonical-slope direction, None otherwise."""
    ix, iy = primitive(d)
    sx = (ix > 0) - (ix < 0)
    sy = (iy > 0) - (iy < 0)
    if abs(ix) == abs(iy) or ix == 0 or iy == 0:
        return _OCTANTS[(sx, sy)]
    return None


@dataclass(frozen=True)
class AngleClass:
    """Undirected angle between two directions, in (0, pi].

    eighths is set when the angle is an exact multiple of pi/4 (1..4),
    None when the angle is not such a multiple ("Other").
    """

    eighths: Optional[int]

    @property
    def is_multiple_of_quarter_pi(self) -> bool:
        return self.eighths is not None


def angle_between(d1: Direction, d2: Direction) -> AngleClass:
    if (d1[0] == 0 and d1[1] == 0) or (d2[0] == 0 and d2[1] == 0):
        raise ValueError("angle of a zero direction")
    o1, o2 = octant(d1), octant(d2)
    if o1 is not None and o2 is not None:
        k = (o2 - o1) % 8
        k = min(k, 8 - k)
        if k == 0:
            # Same supporting line: angle pi if opposite rays, else 0 (invalid).
            if dot(d1, d2) < 0:
                return AngleClass(4)
            raise ValueError("zero angle between equal directions")
        return AngleClass(k)
    c, d = cross(d1, d2), dot(d1, d2)
    if c == 0:
        if d < 0:
            return AngleClass(4)
        raise ValueError("zero angle between equal directions")
    if d == 0:
        return AngleClass(2)
    return AngleClass(None)


def angle_at_least(d1: Direction, d2: Direction, eighths: int) -> bool:
    """Exact test: is the undirected ray angle between d1, d2 >= eighths*pi/4?

    Valid for eighths in {1, 2, 3, 4}; decided by cross/dot sign comparisons.
    """
    if eighths not in (1, 2, 3, 4):
        raise ValueError("eighths must be in 1..4")
    c, d = abs(cross(d1, d2)), dot(d1, d2)
    if c == 0 and d > 0:
        return False  # zero angle
    # theta in (0, pi]; tan-based comparisons.
    if eighths == 1:  # theta >= pi/4  <=>  theta in [pi/4, pi]
        return d <= 0 or c >= d
    if eighths == 2:  # theta >= pi/2
        return d <= 0
    if eighths == 3:  # theta >= 3pi/4
        return d < 0 and c <= -d
    return d < 0 and c == 0  # theta == pi


def angular_compare(d1: Direction, d2: Direction) -> int:
    """Exact counterclockwise angular order from east: -1, 0, or 1."""
    h1, h2 = _half_turn(d1), _half_turn(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = cross(d1, d2)
    return 0 if c == 0 else (-1 if c > 0 else 1)


def _half_turn(d: Direction) -> int:
    dx, dy = d
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def sort_directions_ccw(dirs: list) -> list:
    import functools

    return sorted(dirs, key=functools.cmp_to_key(angular_compare))


def _directed_gap_at_least(d1: Direction, d2: Direction, eighths: int) -> bool:
    """Counterclockwise gap from d1 to d2 is >= eighths*pi/4 (eighths in 1..4)."""
    c = cross(d1, d2)
    d = dot(d1, d2)
    if c == 0:
        return d < 0  # gap exactly pi covers any threshold up to 4
    if c > 0:
        # gap in (0, pi)
        if eighths == 4:
            return False
        if eighths == 1:
            return d <= 0 or c >= d
        if eighths == 2:
            return d <= 0
        return d < 0 and c <= -d
    # c < 0: gap in (pi, 2pi), exceeds every threshold up to pi
    return True


def min_angle_eighths_lower_bound(dirs: list) -> Optional[int]:
    """Largest k in 0..4 such that every consecutive angular gap >= k*pi/4.

    Directions are taken as rays around a common point.  Returns None when
    two rays coincide (zero angle, i.e. overlapping segments).
    """
    n = len(dirs)
    if n < 2:
        return 4
    ordered = sort_directions_ccw(dirs)
    best = 4
    for i in range(n):
        d1 = ordered[i]
        d2 = ordered[(i + 1) % n]
        if cross(d1, d2) == 0 and dot(d1, d2) > 0:
            return None
        k = 0
        for cand in (1, 2, 3, 4):
            if _directed_gap_at_least(d1, d2, cand):
                k = cand
            else:
                break
        best = min(best, k)
    return best
