"""Per-zone measurements, theorem bound evaluators, and counting primitives."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brillouin import (
    GeneratorSet,
    QPoint,
    build,
    circle_lattice_count,
    directions_ring,
    integer_window,
    invert,
    knear_count,
    knear_set,
    ksets_count,
    kth_smallest,
    ray_profile,
    recommended_knear_m,
    stability_gap,
    theorem31_bounds,
    theorem32_bounds,
    theorem61_bound,
    unit_ball_volume,
    zone_report,
    zone_reports,
)

F = Fraction


def test_zone_report_k1(arr3):
    zr = zone_report(arr3, 1)
    assert zr.r_sq == F(1, 4) and zr.R_sq == F(1, 2)
    assert zr.r == 0.5 and zr.R == pytest.approx(math.sqrt(0.5))
    assert zr.area == 1 and zr.n_chambers == 1
    assert zr.reliable
    assert zr.perimeter == pytest.approx(4.0)
    assert zr.distortion == pytest.approx(2 / math.sqrt(math.pi))


def test_zone_report_k2(arr3):
    zr = zone_report(arr3, 2)
    assert zr.r_sq == F(1, 4) and zr.R_sq == 1
    assert zr.area == 1 and zr.n_chambers == 4
    assert zr.max_chamber_area == F(1, 4)
    assert zr.cum_area == 2
    # The 2-disk is the diamond |x|+|y| <= 1.
    assert zr.perimeter == pytest.approx(4 * math.sqrt(2))


def test_zone_reports_cumulative(arr3):
    reps = zone_reports(arr3, arr3.kmax_reliable)
    assert [zr.k for zr in reps] == list(range(1, arr3.kmax_reliable + 1))
    cum = F(0)
    for zr in reps:
        cum += zr.area
        assert zr.cum_area == cum
        assert zr.r_sq <= zr.R_sq
        assert zr.width == pytest.approx(zr.R - zr.r)


def test_unreliable_rows_need_flag(arr3):
    kmax = arr3.kmax_reliable
    with pytest.raises(ValueError):
        zone_reports(arr3, kmax + 2)
    reps = zone_reports(arr3, kmax + 2, allow_unreliable=True)
    assert not reps[-1].reliable and reps[kmax - 1].reliable


def test_theorem31_values():
    b = theorem31_bounds(2, 1)
    assert b.R_hi == pytest.approx(math.sqrt(1 / math.pi) + math.sqrt(2) / 2, abs=1e-12)
    assert b.W_hi == pytest.approx(math.sqrt(2))
    # Formula values are returned even where vacuous at k=1.
    assert b.r_hi == 0.0 and b.r_lo < 0
    b2 = theorem31_bounds(2, 2)
    assert b2.r_hi == pytest.approx(math.sqrt(1 / math.pi))
    assert 0.5 < b2.r_hi


def test_theorem32_unstated_limbs_are_none():
    t = theorem32_bounds(2, 3, 0.1)
    assert t.r_hi is None and t.R_lo is None and t.W_lo is None
    assert t.r_lo is not None and t.R_hi is not None and t.W_hi is not None


def test_theorem32_values():
    t0 = theorem32_bounds(2, 7, 0.0)
    b = theorem31_bounds(2, 7)
    assert t0.r_lo == pytest.approx(b.r_lo)
    assert t0.R_hi == pytest.approx(b.R_hi)
    assert t0.W_hi == pytest.approx(b.W_hi)
    t = theorem32_bounds(2, 34, math.sqrt(2) / 2)
    assert t.R_hi == pytest.approx(math.sqrt(34 / math.pi) + math.sqrt(2), abs=1e-12)
    assert t.W_hi == pytest.approx(math.sqrt(2) + math.sqrt(2))


def test_theorem61_evaluator():
    b = theorem61_bound(2, 50)
    assert b.value == pytest.approx(36 * math.sqrt(2) * math.sqrt(math.pi) * 50 ** -0.25)
    assert not b.valid
    assert b.threshold == pytest.approx(math.pi * (36 * math.sqrt(2)) ** 2)
    assert theorem61_bound(2, 9000).valid
    # d=3 exponent is (-1 + 1/4)/3 = -1/4 as well.
    assert theorem61_bound(3, 16).value / theorem61_bound(3, 1).value == pytest.approx(16 ** -0.25)


def test_unit_ball_volume():
    assert unit_ball_volume(2) == pytest.approx(math.pi)
    assert unit_ball_volume(3) == pytest.approx(4 * math.pi / 3)


def test_ray_profile_axis():
    prof = ray_profile(integer_window(3), (1, 0), kmax=5)
    assert prof.ts == (F(1, 2), 1, 1, 1, F(5, 4))
    assert prof.alpha_sq(1) == F(1, 4)
    assert prof.alpha(1) == 0.5


def test_ray_profile_diagonal():
    prof = ray_profile(integer_window(3), (1, 1), kmax=1)
    assert prof.crossing_point(1) == QPoint(F(1, 2), F(1, 2))
    assert prof.alpha_sq(1) == F(1, 2)


@given(st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(lambda u: u != (0, 0)))
@settings(max_examples=40, deadline=None)
def test_first_crossing_outside_packing_radius(u):
    prof = ray_profile(integer_window(3), u, kmax=1)
    assert prof.alpha_sq(1) >= F(1, 4)


def test_stability_gap_zero_for_identity():
    rep = stability_gap(integer_window(4), 3, directions_ring(2))
    assert all(g.alpha_sq == g.beta_sq for g in rep.gaps)
    assert all(g.gap == 0.0 for g in rep.gaps)


def test_stability_gap_single_moved_generator():
    # Window at scale 10 with (1,0) moved to (11/10, 0): along u=(1,0) the
    # first crossing moves from 1/2 to (121/100)/(22/10) = 11/20.
    pts = tuple(
        (11, 0) if (x, y) == (1, 0) else (10 * x, 10 * y)
        for x, y in integer_window(2).points
    )
    g = GeneratorSet(scale=10, m=2, q=None, seed=None, points=pts)
    rep = stability_gap(g, 1, [(1, 0)])
    gap = rep.gaps[0]
    assert gap.alpha_sq == F(1, 4)
    assert gap.beta_sq == F(121, 400)
    assert gap.gap == pytest.approx(0.05)


def test_directions_ring():
    ring = directions_ring(8)
    assert len(ring) == 64
    assert len(set(ring)) == 64
    assert all(max(abs(x), abs(y)) == 8 for x, y in ring)
    # Pairwise non-parallel except exact opposites.
    for i, u in enumerate(ring):
        for v in ring[i + 1:]:
            if u[0] * v[1] - u[1] * v[0] == 0:
                assert (u[0] + v[0], u[1] + v[1]) == (0, 0)


def test_kth_smallest():
    vals = [F(5), F(1), F(3), F(3), F(9)]
    assert kth_smallest(vals, 1) == 1
    assert kth_smallest(vals, 3) == 3
    assert kth_smallest(vals, 5) == 9
    with pytest.raises(ValueError):
        kth_smallest(vals, 6)


@given(
    st.lists(st.fractions(min_value=-100, max_value=100, max_denominator=50), min_size=1, max_size=9),
    st.integers(min_value=1, max_value=9),
    st.fractions(min_value=0, max_value=2, max_denominator=20),
)
def test_kth_smallest_is_lipschitz(xs, k, eps):
    if k > len(xs):
        return
    ys = [x + eps for x in xs]
    assert abs(kth_smallest(xs, k) - kth_smallest(ys, k)) <= eps


def test_circle_counts():
    assert circle_lattice_count(QPoint(0, 0), 25) == 12
    assert circle_lattice_count(QPoint(F(1, 2), 0), F(1, 4)) == 2
    assert circle_lattice_count(QPoint(0, 0), 2) == 4
    assert circle_lattice_count(QPoint(0, 0), 3) == 0


@given(st.integers(min_value=1, max_value=400))
@settings(max_examples=30)
def test_circle_count_matches_brute_force(n):
    r = int(math.isqrt(n)) + 1
    brute = sum(
        1 for x in range(-r, r + 1) for y in range(-r, r + 1) if x * x + y * y == n
    )
    assert circle_lattice_count(QPoint(0, 0), n) == brute


def test_invert():
    assert invert([(1, 0)])[0] == QPoint(1, 0)
    assert invert([(2, 0)])[0] == QPoint(F(1, 2), 0)
    pts = [QPoint(F(3, 7), F(-2, 5)), QPoint(4, 9)]
    assert invert(invert(pts)) == pts
    with pytest.raises(ValueError):
        invert([(0, 0)])


def test_knear_small(arr5):
    assert knear_count(arr5, 1) == 0
    assert knear_count(arr5, 2) == 4
    assert set(knear_set(arr5, 2)) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_knear_monotone():
    arr = build(integer_window(6))
    counts = [knear_count(arr, k) for k in range(1, 21)]
    assert counts == sorted(counts)
    assert counts[0] == 0 and counts[1] == 4


def test_recommended_knear_m():
    for k in (2, 5, 10):
        m = recommended_knear_m(k)
        # The window must cover twice the outer-radius bound for zone k.
        assert m >= 2 * math.sqrt(k / math.pi) + math.sqrt(2) / 2
        assert recommended_knear_m(k + 1) >= m


def test_ksets_examples():
    assert ksets_count([(0, 0), (1, 0), (0, 1)], 1) == 3
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert ksets_count(square, 2) == 4
    assert ksets_count(square, 0) == 1
    assert ksets_count(square, 4) == 1
    assert ksets_count(square, 1) == 4


def _strictly_separable(s: list[tuple], t: list[tuple]) -> bool:
    """Exact separating-axis test for the convex hulls of two point sets.

    A witness direction for two disjoint convex polygons is always among the
    pairwise-difference normals of either set or a cross vertex difference
    (closest-pair case analysis), so trying all of them is complete."""
    if not s or not t:
        return True
    axes = set()
    for pts in (s, t):
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                axes.add((a[1] - b[1], b[0] - a[0]))
    for a in s:
        for b in t:
            axes.add((b[0] - a[0], b[1] - a[1]))
    for dx, dy in axes:
        if (dx, dy) == (0, 0):
            continue
        smax = max(dx * x + dy * y for x, y in s)
        tmin = min(dx * x + dy * y for x, y in t)
        if smax < tmin:
            return True
        smin = min(dx * x + dy * y for x, y in s)
        tmax = max(dx * x + dy * y for x, y in t)
        if tmax < smin:
            return True
    return False


@given(
    st.lists(
        st.tuples(st.integers(-7, 7), st.integers(-7, 7)),
        min_size=1, max_size=7, unique=True,
    ),
    st.integers(min_value=0, max_value=7),
)
@settings(max_examples=60, deadline=None)
def test_ksets_against_separability_oracle(pts, j):
    if j > len(pts):
        return
    got = ksets_count(pts, j)
    if j in (0, len(pts)):
        assert got == 1
        return
    from itertools import combinations

    brute = sum(
        1
        for sub in combinations(pts, j)
        if _strictly_separable(list(sub), [p for p in pts if p not in sub])
    )
    assert got == brute
