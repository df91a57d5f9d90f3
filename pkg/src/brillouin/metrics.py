"""Zone-level measurements and the counting primitives built on the arrangement.

Areas and squared distances stay exact rationals; square roots and the
isoperimetric quotient are the only float conversions, done once per report.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arrangement import Arrangement, Face
from .exactmath import PI_LO, SQRT2_HI, ceil_fraction, sqrt_bounds
from .geometry import (
    BigRat,
    QPoint,
    polygon_diameter_sq,
    polygon_origin_dist_range,
    sq_dist,
)
from .lattice import GeneratorSet, integer_window


def _fsqrt(x: BigRat | None) -> float:
    if x is None:
        return float("nan")
    return math.sqrt(float(x))


@dataclass(frozen=True)
class ZoneReport:
    """Measurements of one zone; squared lengths and areas are exact."""

    k: int
    r_sq: Optional[BigRat]
    R_sq: Optional[BigRat]
    area: BigRat
    cum_area: BigRat
    perimeter: float
    n_chambers: int
    max_chamber_area: BigRat
    max_chamber_diameter_sq: BigRat
    reliable: bool

    @property
    def r(self) -> float:
        return _fsqrt(self.r_sq)

    @property
    def R(self) -> float:
        return _fsqrt(self.R_sq)

    @property
    def width(self) -> float:
        return self.R - self.r

    @property
    def cum_area_over_k(self) -> float:
        return float(self.cum_area / self.k)

    @property
    def distortion(self) -> float:
        """Isoperimetric quotient of the k-disk: boundary length over the
        circumference of the equal-area circle (> 1 unless a disk)."""
        return self.perimeter / (2.0 * math.sqrt(math.pi * float(self.cum_area)))

    @property
    def max_chamber_diameter(self) -> float:
        return _fsqrt(self.max_chamber_diameter_sq)


def zone_reports(arr: Arrangement, kmax: int, allow_unreliable: bool = False) -> list[ZoneReport]:
    """Reports for zones 1..kmax.  kmax beyond the reliability bound needs
    allow_unreliable; such rows come back flagged reliable=False."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if kmax > arr.kmax_reliable and not allow_unreliable:
        raise ValueError(
            f"kmax={kmax} exceeds the reliability bound {arr.kmax_reliable}; "
            "pass allow_unreliable to compute flagged rows"
        )
    p = arr.generators.scale
    p2 = Fraction(p * p)

    by_depth: dict[int, list[Face]] = {}
    for f in arr.faces:
        if not f.on_clip_boundary:
            by_depth.setdefault(f.depth, []).append(f)

    # Boundary length of the k-disk: bisector edges between depths k-1 and k.
    perim: dict[int, float] = {}
    for h in range(0, len(arr.he_target), 2):
        if arr.he_line[h] == -1:
            continue
        fa = arr.face_of[h]
        fb = arr.face_of[h ^ 1]
        if fa < 0 or fb < 0:
            continue
        da = arr.faces[fa].depth
        db = arr.faces[fb].depth
        lo, hi = (da, db) if da <= db else (db, da)
        if hi == lo + 1:
            va = arr.vertices[arr.he_target[h]]
            vb = arr.vertices[arr.he_target[h ^ 1]]
            perim[hi] = perim.get(hi, 0.0) + math.sqrt(float(sq_dist(va, vb))) / p

    out = []
    cum = Fraction(0)
    for k in range(1, kmax + 1):
        faces = by_depth.get(k - 1, [])
        area = sum((f.area_scaled for f in faces), Fraction(0)) / p2
        cum += area
        if faces:
            r_sq = None
            big_sq = Fraction(0)
            max_area = Fraction(0)
            max_diam = Fraction(0)
            for f in faces:
                lo, hi = polygon_origin_dist_range(f.polygon)
                if r_sq is None or lo < r_sq:
                    r_sq = lo
                if hi > big_sq:
                    big_sq = hi
                if f.area_scaled > max_area:
                    max_area = f.area_scaled
                d = polygon_diameter_sq(f.polygon)
                if d > max_diam:
                    max_diam = d
            r_sq = r_sq / p2
            big_sq = big_sq / p2
            max_area = max_area / p2
            max_diam = max_diam / p2
        else:
            r_sq = None
            big_sq = None
            max_area = Fraction(0)
            max_diam = Fraction(0)
        out.append(
            ZoneReport(
                k=k,
                r_sq=r_sq,
                R_sq=big_sq,
                area=area,
                cum_area=cum,
                perimeter=perim.get(k, 0.0),
                n_chambers=len(faces),
                max_chamber_area=max_area,
                max_chamber_diameter_sq=max_diam,
                reliable=k <= arr.kmax_reliable,
            )
        )
    return out


def zone_report(arr: Arrangement, k: int, allow_unreliable: bool = False) -> ZoneReport:
    return zone_reports(arr, k, allow_unreliable)[-1]


# -- distance bounds -------------------------------------------------------


@dataclass(frozen=True)
class BoundSet:
    """Per-zone distance brackets; limbs a theorem does not state are None."""

    d: int
    k: int
    tau: float
    r_lo: Optional[float]
    r_hi: Optional[float]
    R_lo: Optional[float]
    R_hi: Optional[float]
    W_lo: Optional[float]
    W_hi: Optional[float]


def unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2) / math.gamma(d / 2 + 1)


def theorem31_bounds(d: int, k: int) -> BoundSet:
    """Unperturbed brackets around r_k, R_k, W_k in dimension d.

    The r upper and W lower limbs are vacuous at k = 1 (the volume argument
    they come from needs a nonempty union of earlier zones); callers should
    use the exact k = 1 anchors instead.
    """
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    nu = unit_ball_volume(d)
    rho = (k / nu) ** (1 / d)
    rho_prev = ((k - 1) / nu) ** (1 / d)
    half_diag = math.sqrt(d) / 2
    return BoundSet(
        d=d,
        k=k,
        tau=0.0,
        r_lo=rho - half_diag,
        r_hi=rho_prev,
        R_lo=rho,
        R_hi=rho + half_diag,
        W_lo=rho - rho_prev,
        W_hi=math.sqrt(d),
    )


def theorem32_bounds(d: int, k: int, tau: float) -> BoundSet:
    """Brackets that survive any perturbation of magnitude at most tau."""
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    base = theorem31_bounds(d, k)
    return BoundSet(
        d=d,
        k=k,
        tau=tau,
        r_lo=base.r_lo - tau,
        r_hi=None,
        R_lo=None,
        R_hi=base.R_hi + tau,
        W_lo=None,
        W_hi=math.sqrt(d) + 2 * tau,
    )


@dataclass(frozen=True)
class DiameterBound:
    value: float
    valid: bool
    threshold: float


def theorem61_bound(d: int, k: int) -> DiameterBound:
    """Chamber-diameter bound 18*d*sqrt(d) * nu_d^(1/d) * k^((-1 + 2^(1-d))/d).

    Only valid from k >= nu_d * (18*d*sqrt(d))^d; the flag says whether k
    cleared that threshold.
    """
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    nu = unit_ball_volume(d)
    lead = 18 * d * math.sqrt(d)
    value = lead * nu ** (1 / d) * k ** ((-1 + 1 / 2 ** (d - 1)) / d)
    threshold = nu * lead**d
    return DiameterBound(value=value, valid=k >= threshold, threshold=threshold)


# -- ray profiles ----------------------------------------------------------


@dataclass(frozen=True)
class RayProfile:
    """Bisector crossings along the ray t*u, t > 0, nearest first.

    ts are the exact ray parameters; lambda_sq[i] = ts[i]^2 * |u|^2 is the
    exact squared distance of the i-th crossing from the origin.
    """

    u: tuple[int, int]
    ts: tuple[BigRat, ...]
    lambda_sq: tuple[BigRat, ...]

    def alpha_sq(self, k: int) -> BigRat:
        if not 1 <= k <= len(self.ts):
            raise ValueError(f"k={k} outside the computed profile of {len(self.ts)} crossings")
        return self.lambda_sq[k - 1]

    def alpha(self, k: int) -> float:
        return math.sqrt(float(self.alpha_sq(k)))

    def crossing_point(self, k: int) -> QPoint:
        t = self.ts[k - 1]
        return QPoint(t * self.u[0], t * self.u[1])


def ray_profile(g: GeneratorSet, u: tuple[int, int], kmax: int | None = None) -> RayProfile:
    """Sorted bisector crossings along direction u (integer, nonzero)."""
    u1, u2 = int(u[0]), int(u[1])
    if u1 == 0 and u2 == 0:
        raise ValueError("direction must be nonzero")
    p = g.scale
    ts = []
    for s1, s2 in g.points:
        dot = u1 * s1 + u2 * s2
        if dot > 0:
            ts.append(Fraction(s1 * s1 + s2 * s2, 2 * p * dot))
    ts.sort()
    if kmax is not None:
        if kmax < 1:
            raise ValueError("kmax must be at least 1")
        if len(ts) < kmax:
            raise ValueError(f"only {len(ts)} crossings along u={u!r}; need {kmax}")
        ts = ts[:kmax]
    uu = u1 * u1 + u2 * u2
    return RayProfile(u=(u1, u2), ts=tuple(ts), lambda_sq=tuple(t * t * uu for t in ts))


def kth_smallest(values: Sequence, k: int):
    """k-th smallest value, 1-based; the rank selection behind the profiles."""
    if not 1 <= k <= len(values):
        raise ValueError(f"rank {k} out of range for {len(values)} values")
    return sorted(values)[k - 1]


def directions_ring(h: int = 8) -> list[tuple[int, int]]:
    """All 8h integer boundary points of [-h, h]^2, counterclockwise from (h, 0).

    Pairwise nonparallel, so they give 8h distinct ray directions.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    pts = [
        (x, y)
        for x in range(-h, h + 1)
        for y in range(-h, h + 1)
        if max(abs(x), abs(y)) == h
    ]

    def cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
        ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
        hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cr = a[0] * b[1] - b[0] * a[1]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(pts, key=functools.cmp_to_key(cmp))


@dataclass(frozen=True)
class RayGap:
    u: tuple[int, int]
    alpha_sq: BigRat
    beta_sq: BigRat
    gap: float


@dataclass(frozen=True)
class StabilityReport:
    k: int
    gaps: tuple[RayGap, ...]

    @property
    def max_gap(self) -> float:
        return max(g.gap for g in self.gaps)

    @property
    def argmax(self) -> tuple[int, int]:
        return max(self.gaps, key=lambda g: g.gap).u


def stability_gap(
    g: GeneratorSet, k: int, directions: Sequence[tuple[int, int]]
) -> StabilityReport:
    """Per-direction |beta_k - alpha_k| between g and its unperturbed window."""
    base = integer_window(g.m)
    gaps = []
    for u in directions:
        a_sq = ray_profile(base, u, kmax=k).alpha_sq(k)
        b_sq = ray_profile(g, u, kmax=k).alpha_sq(k)
        gap = abs(math.sqrt(float(b_sq)) - math.sqrt(float(a_sq)))
        gaps.append(RayGap(u=tuple(u), alpha_sq=a_sq, beta_sq=b_sq, gap=gap))
    return StabilityReport(k=k, gaps=tuple(gaps))


# -- counting primitives ---------------------------------------------------


def circle_lattice_count(center: QPoint, r_sq: BigRat) -> int:
    """Number of integer points exactly on the circle of squared radius r_sq."""
    center = center if isinstance(center, QPoint) else QPoint(*center)
    r_sq = Fraction(r_sq)
    if r_sq < 0:
        raise ValueError("squared radius must be nonnegative")
    if r_sq == 0:
        return 1 if (center.x.denominator == 1 and center.y.denominator == 1) else 0
    r_hi = sqrt_bounds(r_sq)[1]
    x0 = ceil_fraction(center.x - r_hi)
    x1 = (center.x + r_hi).numerator // (center.x + r_hi).denominator
    count = 0
    for ix in range(x0, x1 + 1):
        rem = r_sq - (ix - center.x) ** 2
        if rem < 0:
            continue
        ry_hi = sqrt_bounds(rem)[1]
        y0 = ceil_fraction(center.y - ry_hi)
        y1 = (center.y + ry_hi).numerator // (center.y + ry_hi).denominator
        for iy in range(y0, y1 + 1):
            if (ix - center.x) ** 2 + (iy - center.y) ** 2 == r_sq:
                count += 1
    return count


def recommended_knear_m(k: int) -> int:
    """Window radius that certifies the k-near computation (covers 2*R_k)."""
    r_hi = sqrt_bounds(Fraction(k) / PI_LO)[1] + SQRT2_HI / 2
    return ceil_fraction(2 * r_hi)


def knear_set(arr: Arrangement, k: int) -> list[tuple[int, int]]:
    """Generators that are k-near the origin: strictly inside some anchored
    ball whose open interior holds at most k-1 lattice points.

    Read off the arrangement: a qualifies iff some face of depth <= k-1 has a
    strictly closer to its witness than the origin is.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > arr.kmax_reliable:
        raise ValueError(
            f"k={k} beyond the reliability bound {arr.kmax_reliable}; enlarge the window"
        )
    g = arr.generators
    p = g.scale
    near: set[tuple[int, int]] = set()
    for f in arr.faces:
        if f.depth > k - 1 or f.on_clip_boundary:
            continue
        wx, wy = f.interior_witness.x, f.interior_witness.y
        xn, xd = wx.numerator, wx.denominator
        yn, yd = wy.numerator, wy.denominator
        for s in g.points:
            if s in near:
                continue
            s1, s2 = s
            # Witness is in scaled coordinates already, so no extra p factor.
            if 2 * (s1 * xn * yd + s2 * yn * xd) > (s1 * s1 + s2 * s2) * xd * yd:
                near.add(s)
    return sorted(near)


def knear_count(arr: Arrangement, k: int) -> int:
    return len(knear_set(arr, k))


def invert(points: Sequence[QPoint | tuple]) -> list[QPoint]:
    """Circle inversion x -> x / |x|^2 (exact; the origin is rejected)."""
    out = []
    for pt in points:
        q = pt if isinstance(pt, QPoint) else QPoint(*pt)
        nsq = q.sq_norm()
        if nsq == 0:
            raise ValueError("cannot invert the origin")
        out.append(QPoint(q.x / nsq, q.y / nsq))
    return out


def ksets_count(points: Sequence[QPoint | tuple], j: int) -> int:
    """Number of j-element subsets cut off by an open half-plane.

    Exact sweep: critical directions are the perpendiculars of all pairwise
    differences; inside each open arc between consecutive critical directions
    the projection order is fixed and tie-free, so one sample direction per
    arc (the vector sum of its endpoints) sees every achievable j-prefix.
    """
    pts = [pt if isinstance(pt, QPoint) else QPoint(*pt) for pt in points]
    n = len(pts)
    if len({(q.x, q.y) for q in pts}) != n:
        raise ValueError("points must be distinct")
    if not 0 <= j <= n:
        raise ValueError(f"subset size {j} out of range for {n} points")
    if j == 0 or j == n:
        return 1

    dirs: set[tuple[int, int]] = set()
    for i in range(n):
        for l in range(i + 1, n):
            dx = pts[i].x - pts[l].x
            dy = pts[i].y - pts[l].y
            scale = (dx.denominator * dy.denominator) // math.gcd(dx.denominator, dy.denominator)
            wx = -(dy.numerator * (scale // dy.denominator))
            wy = dx.numerator * (scale // dx.denominator)
            g = math.gcd(wx, wy)
            wx, wy = wx // g, wy // g
            dirs.add((wx, wy))
            dirs.add((-wx, -wy))

    def cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
        ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
        hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cr = a[0] * b[1] - b[0] * a[1]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    ordered = sorted(dirs, key=functools.cmp_to_key(cmp))
    subsets: set[frozenset[int]] = set()
    nd = len(ordered)
    for i in range(nd):
        d1 = ordered[i]
        d2 = ordered[(i + 1) % nd]
        s = (d1[0] + d2[0], d1[1] + d2[1])
        if s == (0, 0):
            # Two antipodal critical directions only: arcs are half-circles.
            s = (-d1[1], d1[0])
        proj = [s[0] * q.x + s[1] * q.y for q in pts]
        order = sorted(range(n), key=lambda t: proj[t], reverse=True)
        if proj[order[j - 1]] == proj[order[j]]:
            raise AssertionError("tie on a sampled direction; arc sampling is broken")
        subsets.add(frozenset(order[:j]))
    return len(subsets)
