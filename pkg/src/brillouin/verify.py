"""Self-checks over a built arrangement: exact invariants plus theorem brackets.

Every check returns a CheckResult with a human-readable detail string; a
failing check carries a concrete witness (face index, zone index, point) so
the failure can be reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from numpy.random import Philox

from .arrangement import Arrangement, depth_of_point, locate_face
from .exactmath import PI_LO
from .geometry import QPoint, sq_dist
from .lattice import adversarial_perturbation, magnitude
from .metrics import (
    ZoneReport,
    invert,
    knear_set,
    ksets_count,
    ray_profile,
    theorem31_bounds,
    theorem32_bounds,
    theorem61_bound,
    zone_reports,
)

from .arrangement import build as build_arrangement


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str) -> None:
        self.checks.append(CheckResult(name=name, passed=bool(passed), detail=detail))

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def _count_depth(arr: Arrangement, xn: int, xd: int, yn: int, yd: int) -> int:
    cnt = 0
    for ln in arr.lines:
        if 2 * (ln.a1 * xn * yd + ln.a2 * yn * xd) > ln.c * xd * yd:
            cnt += 1
    return cnt


def check_area_partition(arr: Arrangement, report: VerifyReport) -> None:
    total = sum((f.area_scaled for f in arr.faces), Fraction(0))
    w = arr.clip_half_width * arr.generators.scale
    expected = 4 * w * w
    report.add(
        "area_partition",
        total == expected,
        f"sum of face areas {total} vs clip area {expected}",
    )


def check_depth_witnesses(arr: Arrangement, report: VerifyReport, sample: int = 200, seed: int = 0) -> None:
    """Recount depth at the stored witness and at a second interior point."""
    raws = iter(int(r) for r in Philox(key=seed).random_raw(4 * sample + 64))
    n = len(arr.faces)
    bad = None
    for _ in range(min(sample, n)):
        fi = next(raws) % n
        f = arr.faces[fi]
        wx, wy = f.interior_witness.x, f.interior_witness.y
        if _count_depth(arr, wx.numerator, wx.denominator, wy.numerator, wy.denominator) != f.depth:
            bad = (fi, "witness")
            break
        # Second interior point: average of the witness with a random vertex,
        # still interior by convexity.
        v = f.polygon.vertices[next(raws) % len(f.polygon.vertices)]
        qx = (wx + v.x) / 2
        qy = (wy + v.y) / 2
        if _count_depth(arr, qx.numerator, qx.denominator, qy.numerator, qy.denominator) != f.depth:
            bad = (fi, "second interior point")
            break
    report.add(
        "depth_witness_consistency",
        bad is None,
        "recounted depths match stored" if bad is None else f"face {bad[0]} fails at {bad[1]}",
    )


def check_crossing_rule(arr: Arrangement, report: VerifyReport) -> None:
    bad = None
    for h in range(0, len(arr.he_target), 2):
        if arr.he_line[h] == -1:
            continue
        fa, fb = arr.face_of[h], arr.face_of[h ^ 1]
        if fa < 0 or fb < 0:
            bad = (h, "bisector edge bounding the outer face")
            break
        if abs(arr.faces[fa].depth - arr.faces[fb].depth) != 1:
            bad = (h, f"depths {arr.faces[fa].depth} and {arr.faces[fb].depth}")
            break
    report.add(
        "crossing_rule",
        bad is None,
        "every bisector edge steps depth by one" if bad is None else f"half-edge {bad[0]}: {bad[1]}",
    )


def check_origin_face(arr: Arrangement, report: VerifyReport) -> None:
    f = locate_face(arr, QPoint(0, 0))
    ok = f is not None and f.depth == 0
    report.add(
        "origin_face",
        ok,
        "origin sits in a depth-0 face" if ok else f"located {f and f.depth}",
    )


def check_zone_connectivity(arr: Arrangement, report: VerifyReport, kmax: int) -> None:
    """Each zone's closed chambers form one connected ring (via shared vertices)."""
    bad = None
    for k in range(1, kmax + 1):
        faces = [f for f in arr.faces if f.depth == k - 1 and not f.on_clip_boundary]
        if not faces:
            bad = (k, "empty zone")
            break
        parent = list(range(len(faces)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        byvert: dict[int, int] = {}
        for i, f in enumerate(faces):
            for v in f.vertex_ids:
                if v in byvert:
                    ra, rb = find(byvert[v]), find(i)
                    if ra != rb:
                        parent[ra] = rb
                else:
                    byvert[v] = i
        roots = {find(i) for i in range(len(faces))}
        if len(roots) != 1:
            bad = (k, f"{len(roots)} components")
            break
    report.add(
        "zone_connectivity",
        bad is None,
        f"zones 1..{kmax} connected" if bad is None else f"zone {bad[0]}: {bad[1]}",
    )


def check_symmetry(arr: Arrangement, report: VerifyReport, sample: int = 100, seed: int = 1) -> None:
    """Unperturbed depths are invariant under the square's symmetries."""
    raws = iter(int(r) for r in Philox(key=seed).random_raw(2 * sample + 16))
    g = arr.generators
    n = len(arr.faces)
    bad = None
    for _ in range(min(sample, n)):
        f = arr.faces[next(raws) % n]
        w = f.interior_witness
        for sx, sy, swap in ((-1, 1, False), (1, -1, False), (1, 1, True)):
            qx, qy = (w.y, w.x) if swap else (w.x, w.y)
            img = QPoint(sx * qx, sy * qy)
            if depth_of_point(g, QPoint(img.x / g.scale, img.y / g.scale)) != f.depth:
                bad = (f.vertex_ids[0], (sx, sy, swap))
                break
        if bad:
            break
    report.add(
        "square_symmetry",
        bad is None,
        "depth invariant under the square's symmetries" if bad is None else f"witness near vertex {bad[0]} breaks {bad[1]}",
    )


def check_theorem31(reports: list[ZoneReport], report: VerifyReport) -> None:
    bad = None
    for zr in reports:
        if not zr.reliable:
            continue
        b = theorem31_bounds(2, zr.k)
        if zr.k == 1:
            # Exact anchors replace the vacuous r-upper/W-lower limbs.
            if not (zr.r_sq == Fraction(1, 4) and zr.R_sq == Fraction(1, 2)):
                bad = (1, f"anchors r_sq={zr.r_sq}, R_sq={zr.R_sq}")
                break
            if not (b.r_lo < zr.r and b.R_lo < zr.R < b.R_hi and zr.width < b.W_hi):
                bad = (1, "k=1 limbs")
                break
            continue
        ok = (
            b.r_lo < zr.r < b.r_hi
            and b.R_lo < zr.R < b.R_hi
            and b.W_lo < zr.width < b.W_hi
        )
        if not ok:
            bad = (zr.k, f"r={zr.r} R={zr.R} W={zr.width}")
            break
    report.add(
        "theorem31_brackets",
        bad is None,
        "unperturbed distance brackets hold" if bad is None else f"zone {bad[0]}: {bad[1]}",
    )


def check_theorem32(arr: Arrangement, reports: list[ZoneReport], report: VerifyReport) -> None:
    tau = magnitude(arr.generators).sup
    bad = None
    for zr in reports:
        if not zr.reliable:
            continue
        b = theorem32_bounds(2, zr.k, tau)
        if not (b.r_lo < zr.r and zr.R < b.R_hi and zr.width < b.W_hi):
            bad = (zr.k, f"r={zr.r} R={zr.R} W={zr.width} tau={tau}")
            break
    report.add(
        "theorem32_brackets",
        bad is None,
        f"perturbed brackets hold at tau={tau:.6g}" if bad is None else f"zone {bad[0]}: {bad[1]}",
    )


def check_chamber_bound(reports: list[ZoneReport], report: VerifyReport) -> None:
    bad = None
    for zr in reports:
        if not zr.reliable:
            continue
        if zr.k == 1:
            if zr.n_chambers != 1:
                bad = (1, f"{zr.n_chambers} chambers")
                break
        elif zr.n_chambers > 6 * zr.k - 6:
            bad = (zr.k, f"{zr.n_chambers} > {6 * zr.k - 6}")
            break
    report.add(
        "chamber_bound",
        bad is None,
        "chamber counts within 6k-6" if bad is None else f"zone {bad[0]}: {bad[1]}",
    )


def check_unit_areas(reports: list[ZoneReport], report: VerifyReport) -> None:
    bad = None
    for zr in reports:
        if zr.reliable and zr.area != 1:
            bad = (zr.k, zr.area)
            break
    report.add(
        "unit_zone_areas",
        bad is None,
        "every reliable zone has area exactly 1" if bad is None else f"zone {bad[0]}: area {bad[1]}",
    )


def check_distortion(reports: list[ZoneReport], report: VerifyReport) -> None:
    # Strict isoperimetric inequality: D_k is a polygon, never a disk.
    bad = None
    for zr in reports:
        if zr.reliable and not zr.distortion > 1:
            bad = (zr.k, zr.distortion)
            break
    report.add(
        "distortion_isoperimetric",
        bad is None,
        "distortion strictly above 1 for every reliable k" if bad is None else f"zone {bad[0]}: {bad[1]}",
    )


def check_ray_consistency(arr: Arrangement, report: VerifyReport, kcap: int = 6) -> None:
    """Between consecutive distinct crossings the midpoint has depth exactly k."""
    g = arr.generators
    kmax = min(arr.kmax_reliable, kcap)
    bad = None
    for u in ((1, 0), (2, 1), (1, 1), (-3, 2), (0, -1), (5, -2)):
        prof = ray_profile(g, u, kmax=kmax + 1)
        for k in range(1, kmax + 1):
            if prof.ts[k - 1] == prof.ts[k]:
                continue
            t = (prof.ts[k - 1] + prof.ts[k]) / 2
            d = depth_of_point(g, QPoint(t * u[0], t * u[1]))
            if d != k:
                bad = (u, k, d)
                break
        if bad:
            break
    report.add(
        "ray_depth_consistency",
        bad is None,
        "ray crossings agree with depths" if bad is None else f"u={bad[0]} k={bad[1]} depth={bad[2]}",
    )


def check_ksets_knear(arr: Arrangement, reports: list[ZoneReport], report: VerifyReport, kcap: int = 10) -> None:
    kmax = min(arr.kmax_reliable, kcap, len(reports))
    bad = None
    for k in range(2, kmax + 1):
        near = knear_set(arr, k)
        bound = ksets_count(invert(near), k - 1)
        chambers = reports[k - 1].n_chambers
        if chambers > bound:
            bad = (k, chambers, bound)
            break
    report.add(
        "chambers_vs_ksets",
        bad is None,
        f"chambers bounded by k-set counts up to k={kmax}"
        if bad is None
        else f"zone {bad[0]}: {bad[1]} chambers > {bad[2]} k-sets",
    )


def check_diameter_trend(reports: list[ZoneReport], report: VerifyReport) -> None:
    evald = theorem61_bound(2, 50)
    ok = evald.value > 0 and not evald.valid and theorem61_bound(2, 9000).valid
    detail = f"bound(2,50)={evald.value:.6g} (validity threshold {evald.threshold:.6g})"
    if len(reports) >= 50:
        d50 = reports[49].max_chamber_diameter
        d2 = reports[1].max_chamber_diameter
        ok = ok and d50 < d2
        detail += f"; max diameters {d50:.6g} (k=50) < {d2:.6g} (k=2)"
    report.add("chamber_diameter_trend", ok, detail)


def check_adversarial(report: VerifyReport, k: int, tau: Fraction, x: QPoint, m: int, p: int) -> None:
    """Theorem 6.2 construction: after the move, x's chamber contains B(x, tau/2)."""
    g = adversarial_perturbation(k, tau, x, m, p)
    arr = build_arrangement(g)
    f = locate_face(arr, x)
    if f is None or f.depth != k - 1:
        report.add("adversarial_chamber", False, f"x landed in depth {f and f.depth}")
        return
    # Exact containment: squared distance from x to every supporting line of
    # the chamber at least (tau/2)^2 (scaled plane: distances scale by p).
    xs = QPoint(x.x * p, x.y * p)
    rad_sq = (tau * p / 2) ** 2
    ok = True
    verts = f.polygon.vertices
    for i in range(len(verts)):
        a = verts[i]
        b = verts[(i + 1) % len(verts)]
        ex, ey = b.x - a.x, b.y - a.y
        num = ex * (xs.y - a.y) - (xs.x - a.x) * ey
        if num * num < rad_sq * (ex * ex + ey * ey):
            ok = False
            break
    diam_ok = False
    area_ok = False
    if ok:
        best = max(
            sq_dist(verts[i], verts[j])
            for i in range(len(verts))
            for j in range(i + 1, len(verts))
        )
        diam_ok = best >= (tau * p) ** 2
        area_ok = f.area_scaled > PI_LO * rad_sq
    report.add(
        "adversarial_chamber",
        ok and diam_ok and area_ok,
        f"chamber of x contains B(x, {tau}/2), diameter >= {tau}, area > pi*({tau}/2)^2"
        if ok and diam_ok and area_ok
        else "containment/diameter/area failed",
    )


def run_checks(
    arr: Arrangement,
    kmax: int | None = None,
    allow_unreliable: bool = False,
    adversarial_tau: Fraction | None = None,
) -> VerifyReport:
    """Run the applicable checks for this arrangement and return the report."""
    rep = VerifyReport()
    if kmax is None:
        kmax = max(arr.kmax_reliable, 1)
    reports = zone_reports(arr, kmax, allow_unreliable=allow_unreliable)
    unperturbed = arr.generators.q == 0

    check_area_partition(arr, rep)
    check_depth_witnesses(arr, rep)
    check_crossing_rule(arr, rep)
    check_origin_face(arr, rep)
    check_ray_consistency(arr, rep)
    check_distortion(reports, rep)
    if unperturbed:
        check_zone_connectivity(arr, rep, min(kmax, arr.kmax_reliable))
        check_symmetry(arr, rep)
        check_theorem31(reports, rep)
        check_unit_areas(reports, rep)
        check_chamber_bound(reports, rep)
        check_ksets_knear(arr, reports, rep)
        check_diameter_trend(reports, rep)
    else:
        check_theorem32(arr, reports, rep)
    if adversarial_tau is not None:
        check_adversarial(
            rep, k=5, tau=Fraction(adversarial_tau), x=QPoint(Fraction(11, 10), Fraction(2, 5)),
            m=6, p=10**6,
        )
    return rep
