"""Windows, perturbations, reliability cut-offs, and the adversarial move."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brillouin import (
    GeneratorSet,
    PerturbationConfig,
    QPoint,
    adversarial_perturbation,
    integer_window,
    magnitude,
    perturb,
    reliable_k,
    reliable_k_from_magnitude,
    window_points,
)

F = Fraction


def test_window_counts():
    assert len(window_points(1)) == 8
    assert len(window_points(2)) == 24
    assert len(window_points(9)) == 360


def test_window_row_major_order():
    pts = window_points(2)
    assert pts[0] == (-2, -2)
    assert pts[-1] == (2, 2)
    assert (0, 0) not in pts
    assert pts == sorted(pts)


def test_integer_window_scale_one():
    g = integer_window(3)
    assert g.scale == 1 and g.q == 0
    assert len(g.points) == 48


def test_generator_set_rejects_origin_and_duplicates():
    with pytest.raises(ValueError):
        GeneratorSet(scale=1, m=1, q=0, seed=None, points=((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        GeneratorSet(scale=1, m=1, q=0, seed=None, points=((1, 0), (1, 0)))


def test_generator_set_json_roundtrip():
    g = perturb(PerturbationConfig(m=2, q=1000, seed=5))
    doc = g.to_json_dict()
    assert GeneratorSet.from_json_dict(doc) == g


def test_perturbation_config_bounds():
    PerturbationConfig(m=9, q=5000, seed=0)  # tau = 1/2 inclusive
    with pytest.raises(ValueError):
        PerturbationConfig(m=9, q=5001, seed=0)
    with pytest.raises(ValueError):
        PerturbationConfig(m=9, q=-1, seed=0)
    with pytest.raises(ValueError):
        PerturbationConfig(m=0, q=0, seed=0)


def test_perturb_identity_at_q0():
    g = perturb(PerturbationConfig(m=3, q=0, seed=7))
    base = integer_window(3)
    assert g.points == tuple((10000 * x, 10000 * y) for x, y in base.points)


def test_perturb_deterministic_and_seed_sensitive():
    a = perturb(PerturbationConfig(m=4, q=5000, seed=11))
    b = perturb(PerturbationConfig(m=4, q=5000, seed=11))
    c = perturb(PerturbationConfig(m=4, q=5000, seed=12))
    assert a == b
    assert a.points != c.points


@given(st.integers(min_value=0, max_value=2**63), st.sampled_from([200, 1000, 5000]))
@settings(max_examples=25, deadline=None)
def test_perturb_stays_in_box(seed, q):
    g = perturb(PerturbationConfig(m=2, q=q, seed=seed))
    for (x, y), (ax, ay) in zip(g.points, window_points(2)):
        assert abs(x - 10000 * ax) <= q
        assert abs(y - 10000 * ay) <= q
    assert magnitude(g).sup_sq <= 2 * F(q, 10000) ** 2


def test_magnitude_corner_case():
    g = integer_window(2)
    pts = list((10000 * x, 10000 * y) for x, y in g.points)
    pts[0] = (pts[0][0] + 5000, pts[0][1] + 5000)
    moved = GeneratorSet(scale=10000, m=2, q=5000, seed=None, points=tuple(pts))
    mag = magnitude(moved)
    assert mag.sup_sq == F(1, 2)
    assert mag.sup == pytest.approx(math.sqrt(0.5))
    assert magnitude(integer_window(2)).sup_sq == 0


def test_reliability_values():
    assert reliable_k(9, 0, 10000).kmax == 57
    assert reliable_k(9, 200, 10000).kmax == 56
    assert reliable_k(9, 1000, 10000).kmax == 52
    assert reliable_k(9, 5000, 10000).kmax == 34


def test_reliability_bound_is_strict():
    rel = reliable_k(9, 1000, 10000)
    assert rel.kmax < rel.bound <= rel.kmax + 1


@given(
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=0, max_value=4999),
    st.integers(min_value=0, max_value=4999),
)
@settings(max_examples=50)
def test_reliability_monotone(m, q1, q2):
    lo, hi = sorted((q1, q2))
    assert reliable_k(m, hi, 10000).kmax <= reliable_k(m, lo, 10000).kmax
    assert reliable_k(m, lo, 10000).kmax <= reliable_k(m + 1, lo, 10000).kmax


def test_reliability_from_magnitude_conservative():
    # Worst-case box displacement at strength tau is sqrt(2)*tau; fed to the
    # magnitude form (margin 3g > (2sqrt2+1)tau) it must be the more cautious.
    from brillouin.exactmath import SQRT2_HI

    tau = F(1, 10)
    by_mag = reliable_k_from_magnitude(9, SQRT2_HI * tau).kmax
    assert 1 <= by_mag <= reliable_k(9, 1000, 10000).kmax
    assert reliable_k_from_magnitude(9, F(0)).kmax == reliable_k(9, 0, 10000).kmax


def test_adversarial_worked_example():
    g = adversarial_perturbation(2, F(2, 5), QPoint(F(3, 5), 0), m=4)
    moved = dict(zip(window_points(4), g.points))
    assert moved[(1, 0)] == (8000, 0)
    # Points far from the sphere around x through 0 stay put.
    assert moved[(3, 3)] == (30000, 30000)


def test_adversarial_tiny_tau_is_identity():
    g = adversarial_perturbation(2, F(1, 1000), QPoint(F(3, 5), 0), m=3)
    assert g.points == tuple((10000 * x, 10000 * y) for x, y in window_points(3))


def test_adversarial_moved_points_land_on_shell():
    tau = F(2, 5)
    x = QPoint(F(11, 10), F(2, 5))
    g = adversarial_perturbation(5, tau, x, m=6, p=10**6)
    r = math.sqrt(float(x.x**2 + x.y**2))
    p = g.scale
    slack = 2.0 / p
    n_moved = 0
    for (ax, ay), (bx, by) in zip(window_points(6), g.points):
        if (p * ax, p * ay) == (bx, by):
            continue
        n_moved += 1
        d = math.hypot(float(x.x - F(bx, p)), float(x.y - F(by, p)))
        assert abs(abs(d - r) - float(tau)) < slack
        assert math.hypot(bx / p - ax, by / p - ay) <= float(tau) + slack
    assert n_moved > 0


def test_adversarial_rejections():
    with pytest.raises(ValueError):
        adversarial_perturbation(2, F(2, 5), QPoint(F(1, 2), 0), m=3)  # on a bisector
    with pytest.raises(ValueError):
        adversarial_perturbation(3, F(2, 5), QPoint(F(3, 5), 0), m=3)  # depth mismatch
    with pytest.raises(ValueError):
        adversarial_perturbation(2, F(1, 2), QPoint(F(3, 5), 0), m=3)  # tau too large
    with pytest.raises(ValueError):
        adversarial_perturbation(2, F(0), QPoint(F(3, 5), 0), m=3)
