"""Exact arrangement of all bisector lines of a generator set, clipped to a box.

The construction is the classic all-pairs one: intersect every pair of lines
with Cramer's rule, deduplicate vertices by canonical reduced coordinates,
sort the vertices along each line, and stitch half-edges into faces with the
rule next(h) = counterclockwise predecessor of twin(h) among the edges out of
h's head.  Everything is integer or rational arithmetic; floats appear only
as sort pre-keys whose order is re-verified exactly.

Coordinates live in the scaled plane (generator coordinates are integers at
g.scale), so all vertex coordinates here are scale times the true ones.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .exactmath import PI_LO, SQRT2_HI, ceil_fraction, sqrt_bounds
from .geometry import (
    BigRat,
    BisectorLine,
    ConvexPolygon,
    QPoint,
    bisector_of,
    polygon_contains,
)
from .lattice import GeneratorSet, magnitude, reliable_k, reliable_k_from_magnitude

_INT64_GUARD = 2**62


@dataclass
class Face:
    """Bounded arrangement cell: convex polygon plus its depth.

    depth counts the generators strictly closer to the cell interior than the
    origin; interior_witness is the vertex centroid (scaled coordinates).
    """

    polygon: ConvexPolygon
    depth: int
    interior_witness: QPoint
    on_clip_boundary: bool
    vertex_ids: tuple[int, ...]
    area_scaled: BigRat


@dataclass
class Arrangement:
    generators: GeneratorSet
    clip_half_width: BigRat  # lattice units
    lines: list[BisectorLine]
    vertices: list[QPoint]  # scaled coordinates
    faces: list[Face]
    kmax_reliable: int
    max_multiplicity: int
    # Half-edge tables kept for metrics and verification.  Twin of h is h^1;
    # he_target[h] is the head vertex, he_line[h] the line index (-1 on the
    # clip box), face_of[h] the face left of h.
    he_target: list[int]
    he_line: list[int]
    he_next: list[int]
    face_of: list[int]
    outer_face_cycle: list[int]
    _bucket_grid: Optional[dict] = None

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def stats(self) -> dict:
        return {
            "n_lines": self.n_lines,
            "n_vertices": self.n_vertices,
            "n_faces": self.n_faces,
            "max_multiplicity": self.max_multiplicity,
            "kmax_reliable": self.kmax_reliable,
        }


def _reliability_of(g: GeneratorSet):
    if g.q is not None:
        return reliable_k(g.m, g.q, g.scale)
    if not g.is_window_shaped:
        # Nothing is provable about a free-form set; report zero reliability.
        return reliable_k_from_magnitude(g.m, Fraction(g.m))
    mag_hi = sqrt_bounds(magnitude(g).sup_sq)[1]
    return reliable_k_from_magnitude(g.m, mag_hi)


def default_clip_half_width(g: GeneratorSet) -> BigRat:
    """Clip just beyond the outer radius of the last reliable zone, plus one.

    Rounded up to a denominator of 16 so box arithmetic stays in small
    integers.
    """
    rel = _reliability_of(g)
    k = max(rel.kmax, 1)
    if g.q is not None:
        tau_hi = SQRT2_HI * Fraction(g.q, g.scale)
    else:
        tau_hi = sqrt_bounds(magnitude(g).sup_sq)[1]
    raw = sqrt_bounds(Fraction(k) / PI_LO)[1]
    raw = raw + SQRT2_HI / 2 + tau_hi + 1
    return Fraction(ceil_fraction(raw * 16), 16)


def _reduce_pair(num: int, den: int) -> tuple[int, int]:
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    return num // g, den // g


def _rat_cmp(n1: int, d1: int, n2: int, d2: int) -> int:
    v = n1 * d2 - n2 * d1
    return (v > 0) - (v < 0)


def _sort_by_rational(items: list[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    """Sort (num, den, vid) by num/den: float pre-key, exact verification."""
    items.sort(key=lambda t: t[0] / t[1])
    for i in range(len(items) - 1):
        n1, d1, _ = items[i]
        n2, d2, _ = items[i + 1]
        if _rat_cmp(n1, d1, n2, d2) > 0:
            items.sort(key=functools.cmp_to_key(lambda a, b: _rat_cmp(a[0], a[1], b[0], b[1])))
            break
    return items


def _dir_half(d: tuple[int, int]) -> int:
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _dir_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    ha, hb = _dir_half(a), _dir_half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cr = a[0] * b[1] - b[0] * a[1]
    if cr == 0:
        raise AssertionError("duplicate primitive direction")
    return -1 if cr > 0 else 1


class _Builder:
    def __init__(self, g: GeneratorSet, clip_scaled: Fraction):
        self.g = g
        self.wn = clip_scaled.numerator
        self.wd = clip_scaled.denominator
        self.coeffs: list[tuple[int, int, int]] = []
        self.vkey: dict[tuple[int, int, int, int], int] = {}
        self.vx: list[tuple[int, int]] = []  # reduced (num, den), den > 0
        self.vy: list[tuple[int, int]] = []
        self.vmult: list[int] = []
        self.line_verts: list[set[int]] = []
        self.side_verts: list[set[int]] = [set(), set(), set(), set()]
        self.he_target: list[int] = []
        self.he_dir: list[int] = []
        self.he_line: list[int] = []
        self.out_edges: dict[int, list[int]] = {}
        self.dir_ids: dict[tuple[int, int], int] = {}
        self.dir_vecs: list[tuple[int, int]] = []

    def vertex(self, xn: int, xd: int, yn: int, yd: int, line: int | None) -> int:
        key = (xn, xd, yn, yd)
        vid = self.vkey.get(key)
        if vid is None:
            vid = len(self.vx)
            self.vkey[key] = vid
            self.vx.append((xn, xd))
            self.vy.append((yn, yd))
            self.vmult.append(0)
        if line is not None and vid not in self.line_verts[line]:
            self.line_verts[line].add(vid)
            self.vmult[vid] += 1
        return vid

    def dir_id(self, d: tuple[int, int]) -> int:
        did = self.dir_ids.get(d)
        if did is None:
            did = len(self.dir_vecs)
            self.dir_ids[d] = did
            self.dir_vecs.append(d)
        return did

    def add_edge(self, u: int, v: int, fwd: int, rev: int, line: int) -> None:
        h = len(self.he_target)
        self.he_target.append(v)
        self.he_dir.append(fwd)
        self.he_line.append(line)
        self.he_target.append(u)
        self.he_dir.append(rev)
        self.he_line.append(line)
        self.out_edges.setdefault(u, []).append(h)
        self.out_edges.setdefault(v, []).append(h + 1)

    # -- pairwise intersections -------------------------------------------

    def intersect_pairs(self) -> None:
        coeffs = self.coeffs
        n = len(coeffs)
        max_a = max(abs(c[0]) for c in coeffs)
        max_b = max(abs(c[1]) for c in coeffs)
        max_c = max(abs(c[2]) for c in coeffs)
        max_delta = 2 * max_a * max_b
        max_num = 2 * max_c * max(max_a, max_b)
        fits = (
            max_delta < _INT64_GUARD
            and max_num < _INT64_GUARD
            and max_num * self.wd < _INT64_GUARD
            and self.wn * max_delta < _INT64_GUARD
        )
        if fits:
            self._pairs_numpy()
        else:
            self._pairs_python()

    def _record_pair(self, i: int, j: int, delta: int, nx: int, ny: int) -> None:
        if delta < 0:
            delta, nx, ny = -delta, -nx, -ny
        xn, xd = _reduce_pair(nx, delta)
        yn, yd = _reduce_pair(ny, delta)
        vid = self.vertex(xn, xd, yn, yd, i)
        self.vertex(xn, xd, yn, yd, j)
        del vid

    def _pairs_numpy(self) -> None:
        coeffs = self.coeffs
        a = np.array([c[0] for c in coeffs], dtype=np.int64)
        b = np.array([c[1] for c in coeffs], dtype=np.int64)
        c = np.array([c[2] for c in coeffs], dtype=np.int64)
        wn, wd = self.wn, self.wd
        for i in range(len(coeffs) - 1):
            aj = a[i + 1 :]
            bj = b[i + 1 :]
            cj = c[i + 1 :]
            delta = a[i] * bj - aj * b[i]
            nx = c[i] * bj - cj * b[i]
            ny = a[i] * cj - aj * c[i]
            bound = wn * np.abs(delta)
            ok = (delta != 0) & (np.abs(nx) * wd <= bound) & (np.abs(ny) * wd <= bound)
            for j0 in np.nonzero(ok)[0]:
                self._record_pair(
                    i, i + 1 + int(j0), int(delta[j0]), int(nx[j0]), int(ny[j0])
                )

    def _pairs_python(self) -> None:
        coeffs = self.coeffs
        wn, wd = self.wn, self.wd
        n = len(coeffs)
        for i in range(n - 1):
            ai, bi, ci = coeffs[i]
            for j in range(i + 1, n):
                aj, bj, cj = coeffs[j]
                delta = ai * bj - aj * bi
                if delta == 0:
                    continue
                nx = ci * bj - cj * bi
                ny = ai * cj - aj * ci
                bound = wn * abs(delta)
                if abs(nx) * wd <= bound and abs(ny) * wd <= bound:
                    self._record_pair(i, j, delta, nx, ny)

    # -- clip box ----------------------------------------------------------

    def boundary_hits(self, i: int) -> None:
        a, b, c = self.coeffs[i]
        wn, wd = self.wn, self.wd
        if b != 0:
            for sx in (1, -1):
                num = c * wd - a * sx * wn
                if abs(num) <= wn * abs(b):
                    yn, yd = _reduce_pair(num, b * wd)
                    vid = self.vertex(sx * wn, wd, yn, yd, i)
                    self.side_verts[0 if sx > 0 else 1].add(vid)
        if a != 0:
            for sy in (1, -1):
                num = c * wd - b * sy * wn
                if abs(num) <= wn * abs(a):
                    xn, xd = _reduce_pair(num, a * wd)
                    vid = self.vertex(xn, xd, sy * wn, wd, i)
                    self.side_verts[2 if sy > 0 else 3].add(vid)

    def add_corners(self) -> None:
        wn, wd = self.wn, self.wd
        ne = self.vertex(wn, wd, wn, wd, None)
        nw = self.vertex(-wn, wd, wn, wd, None)
        sw = self.vertex(-wn, wd, -wn, wd, None)
        se = self.vertex(wn, wd, -wn, wd, None)
        self.side_verts[0].update((ne, se))
        self.side_verts[1].update((nw, sw))
        self.side_verts[2].update((ne, nw))
        self.side_verts[3].update((sw, se))

    # -- stitching ---------------------------------------------------------

    def line_edges(self, i: int) -> None:
        vids = self.line_verts[i]
        if len(vids) < 2:
            return
        a, b, _ = self.coeffs[i]
        d = (-b, a)
        g = gcd(d[0], d[1])
        d = (d[0] // g, d[1] // g)
        if d[0] < 0 or (d[0] == 0 and d[1] < 0):
            d = (-d[0], -d[1])
        fwd = self.dir_id(d)
        rev = self.dir_id((-d[0], -d[1]))
        coords = self.vx if d[0] != 0 else self.vy
        items = [(coords[v][0], coords[v][1], v) for v in vids]
        _sort_by_rational(items)
        for t in range(len(items) - 1):
            self.add_edge(items[t][2], items[t + 1][2], fwd, rev, i)

    def box_edges(self) -> None:
        for side in range(4):
            vids = self.side_verts[side]
            vertical = side in (0, 1)
            d = (0, 1) if vertical else (1, 0)
            fwd = self.dir_id(d)
            rev = self.dir_id((-d[0], -d[1]))
            coords = self.vy if vertical else self.vx
            items = [(coords[v][0], coords[v][1], v) for v in vids]
            _sort_by_rational(items)
            for t in range(len(items) - 1):
                self.add_edge(items[t][2], items[t + 1][2], fwd, rev, -1)

    def stitch(self) -> list[int]:
        order = sorted(range(len(self.dir_vecs)), key=functools.cmp_to_key(
            lambda p, q: _dir_cmp(self.dir_vecs[p], self.dir_vecs[q])
        ))
        rank = [0] * len(self.dir_vecs)
        for pos, did in enumerate(order):
            rank[did] = pos
        he_next = [-1] * len(self.he_target)
        he_dir = self.he_dir
        for outs in self.out_edges.values():
            outs.sort(key=lambda h: rank[he_dir[h]])
            for idx, h in enumerate(outs):
                he_next[h ^ 1] = outs[idx - 1]
        return he_next


def build(g: GeneratorSet, clip_half_width: BigRat | int | None = None) -> Arrangement:
    """Build the clipped bisector arrangement of g with exact arithmetic."""
    rel = _reliability_of(g)
    if clip_half_width is None:
        clip = default_clip_half_width(g)
    else:
        clip = Fraction(clip_half_width)
        if clip <= 0:
            raise ValueError("clip half-width must be positive")
    p = g.scale
    clip_scaled = clip * p

    lines = [bisector_of(x, y) for x, y in g.points]
    bld = _Builder(g, clip_scaled)
    wn, wd = bld.wn, bld.wd
    for ln in lines:
        a, b, c = 2 * ln.a1, 2 * ln.a2, ln.c
        if (b == 0 and (c * wd == a * wn or c * wd == -a * wn)) or (
            a == 0 and (c * wd == b * wn or c * wd == -b * wn)
        ):
            raise ValueError(
                f"bisector of {(ln.a1, ln.a2)} coincides with the clip boundary; "
                "choose a different clip half-width"
            )
        bld.coeffs.append((a, b, c))
        bld.line_verts.append(set())

    bld.intersect_pairs()
    for i in range(len(lines)):
        bld.boundary_hits(i)
    bld.add_corners()
    for i in range(len(lines)):
        bld.line_edges(i)
    bld.box_edges()
    he_next = bld.stitch()

    vertices = [QPoint(Fraction(*bld.vx[v]), Fraction(*bld.vy[v])) for v in range(len(bld.vx))]

    # Trace faces: next() keeps the face interior on the left, so bounded
    # faces come out counterclockwise (positive area) and the single outer
    # face clockwise (negative).
    nhe = len(bld.he_target)
    face_of = [-1] * nhe
    cycles: list[list[int]] = []
    for h0 in range(nhe):
        if face_of[h0] != -1:
            continue
        cyc = []
        h = h0
        while True:
            face_of[h] = len(cycles)
            cyc.append(h)
            h = he_next[h]
            if h == h0:
                break
            if len(cyc) > nhe:
                raise AssertionError("half-edge cycle failed to close")
        cycles.append(cyc)

    faces: list[Face] = []
    outer_cycle: list[int] = []
    outer_seen = 0
    face_index_map = [-1] * len(cycles)
    total_area2 = Fraction(0)
    for ci, cyc in enumerate(cycles):
        vids = tuple(bld.he_target[h ^ 1] for h in cyc)
        pts = [vertices[v] for v in vids]
        area2 = Fraction(0)
        n = len(pts)
        for t in range(n):
            a_pt = pts[t]
            b_pt = pts[(t + 1) % n]
            area2 += a_pt.x * b_pt.y - b_pt.x * a_pt.y
        if area2 < 0:
            outer_seen += 1
            outer_cycle = cyc
            total_area2 += area2
            continue
        if area2 == 0:
            raise AssertionError("degenerate zero-area face cycle")
        total_area2 += area2
        sx = sum(pt.x for pt in pts)
        sy = sum(pt.y for pt in pts)
        witness = QPoint(sx / n, sy / n)
        on_box = any(bld.he_line[h] == -1 for h in cyc)
        face_index_map[ci] = len(faces)
        faces.append(
            Face(
                polygon=ConvexPolygon(pts, validate=False),
                depth=-1,
                interior_witness=witness,
                on_clip_boundary=on_box,
                vertex_ids=vids,
                area_scaled=area2 / 2,
            )
        )
    if outer_seen != 1:
        raise AssertionError(f"expected exactly one outer face, found {outer_seen}")
    if total_area2 != 0:
        raise AssertionError("face areas do not cancel against the outer cycle")

    # Depth by direct counting at each face's interior witness.
    coeffs = bld.coeffs
    for f in faces:
        wx, wy = f.interior_witness.x, f.interior_witness.y
        dd = wx.denominator * wy.denominator // gcd(wx.denominator, wy.denominator)
        xi = wx.numerator * (dd // wx.denominator)
        yi = wy.numerator * (dd // wy.denominator)
        cnt = 0
        for a, b, c in coeffs:
            if a * xi + b * yi > c * dd:
                cnt += 1
        f.depth = cnt

    # Remap face_of to bounded-face indices (-1 marks the outer face).
    face_of = [face_index_map[ci] for ci in face_of]

    return Arrangement(
        generators=g,
        clip_half_width=clip,
        lines=lines,
        vertices=vertices,
        faces=faces,
        kmax_reliable=rel.kmax,
        max_multiplicity=max(bld.vmult) if bld.vmult else 0,
        he_target=bld.he_target,
        he_line=bld.he_line,
        he_next=he_next,
        face_of=face_of,
        outer_face_cycle=outer_cycle,
    )


def zone(arr: Arrangement, k: int) -> list[Face]:
    """Faces of the k-th zone (depth k-1), excluding clip-boundary faces."""
    if k < 1:
        raise ValueError("zone index k starts at 1")
    return [f for f in arr.faces if f.depth == k - 1 and not f.on_clip_boundary]


def depth_of_point(g: GeneratorSet, x: QPoint) -> int:
    """Number of generators strictly closer to x than the origin (brute force)."""
    x = x if isinstance(x, QPoint) else QPoint(*x)
    p = g.scale
    xn, xd = x.x.numerator, x.x.denominator
    yn, yd = x.y.numerator, x.y.denominator
    cnt = 0
    for s1, s2 in g.points:
        # 2p<x, s> > ||s||^2, cleared of denominators (xd, yd > 0).
        if 2 * p * (s1 * xn * yd + s2 * yn * xd) > (s1 * s1 + s2 * s2) * xd * yd:
            cnt += 1
    return cnt


def _build_buckets(arr: Arrangement) -> dict:
    nb = max(4, int(len(arr.faces) ** 0.5))
    w = float(arr.clip_half_width * arr.generators.scale)
    cell = 2 * w / nb
    grid: dict[tuple[int, int], list[int]] = {}
    for fi, f in enumerate(arr.faces):
        xs = [float(v.x) for v in f.polygon.vertices]
        ys = [float(v.y) for v in f.polygon.vertices]
        pad = 1e-9 * w + 1e-12
        i0 = max(0, min(nb - 1, int((min(xs) + w - pad) / cell)))
        i1 = max(0, min(nb - 1, int((max(xs) + w + pad) / cell)))
        j0 = max(0, min(nb - 1, int((min(ys) + w - pad) / cell)))
        j1 = max(0, min(nb - 1, int((max(ys) + w + pad) / cell)))
        for bi in range(i0, i1 + 1):
            for bj in range(j0, j1 + 1):
                grid.setdefault((bi, bj), []).append(fi)
    return {"nb": nb, "w": w, "cell": cell, "grid": grid}


def locate_face(arr: Arrangement, x: QPoint) -> Optional[Face]:
    """Face whose closed polygon contains x (lattice units), or None outside the clip.

    Points on shared edges resolve to the lowest face index.
    """
    x = x if isinstance(x, QPoint) else QPoint(*x)
    xs = QPoint(x.x * arr.generators.scale, x.y * arr.generators.scale)
    if arr._bucket_grid is None:
        arr._bucket_grid = _build_buckets(arr)
    bg = arr._bucket_grid
    nb, w, cell = bg["nb"], bg["w"], bg["cell"]
    fx, fy = float(xs.x), float(xs.y)
    bi = max(0, min(nb - 1, int((fx + w) / cell)))
    bj = max(0, min(nb - 1, int((fy + w) / cell)))
    seen = []
    for di in (0, -1, 1):
        for dj in (0, -1, 1):
            ci, cj = bi + di, bj + dj
            if 0 <= ci < nb and 0 <= cj < nb:
                seen.extend(bg["grid"].get((ci, cj), []))
    for fi in sorted(set(seen)):
        if polygon_contains(arr.faces[fi].polygon, xs):
            return arr.faces[fi]
    return None


def to_json_dict(arr: Arrangement) -> dict:
    """JSON-ready dict: exact vertex coordinates (lattice units) and face index lists."""
    p = arr.generators.scale

    def fstr(fr: Fraction) -> str:
        return f"{fr.numerator}/{fr.denominator}"

    return {
        "generators": arr.generators.to_json_dict(),
        "clip_half_width": fstr(arr.clip_half_width),
        "stats": arr.stats(),
        "vertices": [[fstr(v.x / p), fstr(v.y / p)] for v in arr.vertices],
        "faces": [
            {
                "vertices": list(f.vertex_ids),
                "depth": f.depth,
                "on_clip_boundary": f.on_clip_boundary,
            }
            for f in arr.faces
        ],
    }
