"""Exact planar primitives: rational points, bisector lines, convex polygons.

Coordinates are Python ints and fractions.Fraction throughout, so every
predicate here is decided exactly; nothing rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

BigInt = int
BigRat = Fraction

RatLike = BigRat | int


@dataclass(frozen=True)
class QPoint:
    """Point with exact rational coordinates."""

    x: BigRat
    y: BigRat

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def sq_norm(self) -> BigRat:
        return self.x * self.x + self.y * self.y

    def __sub__(self, other: "QPoint") -> "QPoint":
        return QPoint(self.x - other.x, self.y - other.y)

    def __add__(self, other: "QPoint") -> "QPoint":
        return QPoint(self.x + other.x, self.y + other.y)


def sq_dist(p: QPoint, q: QPoint) -> BigRat:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


@dataclass(frozen=True)
class BisectorLine:
    """Perpendicular bisector of segment [0, (a1, a2)]: 2*a1*x + 2*a2*y = c.

    c equals a1**2 + a2**2, so the origin always evaluates to -c < 0.
    """

    a1: BigInt
    a2: BigInt
    c: BigInt

    def evaluate(self, p: QPoint) -> BigRat:
        """Positive on the generator side, zero on the line, negative on the origin side."""
        return 2 * self.a1 * p.x + 2 * self.a2 * p.y - self.c


def bisector_of(a1: BigInt, a2: BigInt) -> BisectorLine:
    """Bisector between the origin and the integer point (a1, a2)."""
    if a1 == 0 and a2 == 0:
        raise ValueError("the origin has no bisector with itself")
    return BisectorLine(a1, a2, a1 * a1 + a2 * a2)


def line_intersect(la: BisectorLine, lb: BisectorLine) -> Optional[QPoint]:
    """Exact intersection point of two bisector lines, or None when parallel.

    Cramer's rule on the 2x2 system; the determinant is twice the cross
    product of the generators, so parallel (including coincident-direction)
    pairs return None.
    """
    delta = 2 * (la.a1 * lb.a2 - lb.a1 * la.a2)
    if delta == 0:
        return None
    d1 = la.c * lb.a2 - lb.c * la.a2
    d2 = la.a1 * lb.c - lb.a1 * la.c
    return QPoint(Fraction(d1, delta), Fraction(d2, delta))


def cmp_sq_dist(x: QPoint, p: QPoint, q: QPoint) -> int:
    """-1, 0, or 1 as x is nearer to p, equidistant, or nearer to q."""
    d = sq_dist(x, p) - sq_dist(x, q)
    if d < 0:
        return -1
    if d > 0:
        return 1
    return 0


def _signed_area2(vertices: Sequence[QPoint]) -> BigRat:
    total = Fraction(0)
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


class ConvexPolygon:
    """Convex polygon stored counterclockwise with no repeated or collinear run of vertices."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[QPoint], validate: bool = True):
        verts = [v if isinstance(v, QPoint) else QPoint(*v) for v in vertices]
        if len(verts) < 3:
            raise ValueError("a polygon needs at least three vertices")
        area2 = _signed_area2(verts)
        if area2 == 0:
            raise ValueError("degenerate polygon with zero area")
        if area2 < 0:
            verts.reverse()
        if validate:
            n = len(verts)
            for i in range(n):
                a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
                cross = (b.x - a.x) * (c.y - b.y) - (c.x - b.x) * (b.y - a.y)
                if cross <= 0:
                    raise ValueError(f"vertices are not strictly convex at index {i}")
        self.vertices = tuple(verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"ConvexPolygon({list(self.vertices)!r})"


def polygon_area(poly: ConvexPolygon) -> BigRat:
    """Exact enclosed area."""
    return _signed_area2(poly.vertices) / 2


def polygon_diameter_sq(poly: ConvexPolygon) -> BigRat:
    """Exact squared diameter (maximum over vertex pairs)."""
    verts = poly.vertices
    best = Fraction(0)
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            d = sq_dist(verts[i], verts[j])
            if d > best:
                best = d
    return best


def polygon_contains(poly: ConvexPolygon, p: QPoint, strict: bool = False) -> bool:
    """Membership in the closed polygon (strict=True for the open interior)."""
    verts = poly.vertices
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)
        if cross < 0 or (strict and cross == 0):
            return False
    return True


def polygon_origin_dist_range(poly: ConvexPolygon) -> tuple[BigRat, BigRat]:
    """Exact (min, max) squared distance from the origin to the polygon boundary.

    Min over vertices and perpendicular feet on edges, max at a vertex.  The
    boundary is the right object here: a region containing the origin still
    reports the distance to its nearest wall.
    """
    verts = poly.vertices
    max_sq = max(v.sq_norm() for v in verts)
    min_sq = None
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        e = b - a
        ee = e.sq_norm()
        # Foot of the perpendicular from the origin, clamped to the segment.
        t = -(a.x * e.x + a.y * e.y) / ee
        if t < 0:
            t = Fraction(0)
        elif t > 1:
            t = Fraction(1)
        cx = a.x + t * e.x
        cy = a.y + t * e.y
        d = cx * cx + cy * cy
        if min_sq is None or d < min_sq:
            min_sq = d
    assert min_sq is not None
    return min_sq, max_sq
