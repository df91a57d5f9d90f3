"""The self-check suite: green on honest builds, loud on corrupted ones."""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from brillouin import run_checks
from brillouin.verify import (
    check_area_partition,
    check_crossing_rule,
    check_depth_witnesses,
    VerifyReport,
)

F = Fraction


def _by_name(report, name):
    hits = [c for c in report.checks if c.name == name]
    assert len(hits) == 1, f"expected exactly one {name} check"
    return hits[0]


def test_all_checks_pass_unperturbed(arr3):
    rep = run_checks(arr3)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    names = {c.name for c in rep.checks}
    assert {"area_partition", "crossing_rule", "theorem31_brackets",
            "unit_zone_areas", "chamber_bound", "distortion_isoperimetric"} <= names


def test_perturbed_run_swaps_bracket_suite(arr9_q1000):
    rep = run_checks(arr9_q1000)
    assert rep.passed, [c for c in rep.checks if not c.passed]
    names = {c.name for c in rep.checks}
    assert "theorem32_brackets" in names
    assert "theorem31_brackets" not in names
    assert "chamber_bound" not in names


def test_adversarial_check_included_on_request(arr3):
    rep = run_checks(arr3, adversarial_tau=F(2, 5))
    assert _by_name(rep, "adversarial_chamber").passed


def test_corrupted_depth_is_caught(arr3):
    faces = list(arr3.faces)
    faces[5] = dataclasses.replace(faces[5], depth=faces[5].depth + 1)
    bad = dataclasses.replace(arr3, faces=faces)
    rep = VerifyReport()
    check_depth_witnesses(bad, rep)
    check_crossing_rule(bad, rep)
    assert not rep.passed
    failed = [c for c in rep.checks if not c.passed]
    # Failure details name a concrete face or half-edge witness.
    assert any(any(ch.isdigit() for ch in c.detail) for c in failed)


def test_corrupted_area_is_caught(arr3):
    faces = list(arr3.faces)
    faces[0] = dataclasses.replace(faces[0], area_scaled=faces[0].area_scaled + 1)
    bad = dataclasses.replace(arr3, faces=faces)
    rep = VerifyReport()
    check_area_partition(bad, rep)
    assert not rep.passed


def test_report_json_shape(arr3):
    rep = run_checks(arr3)
    doc = rep.to_json_dict()
    assert doc["passed"] is True
    assert all({"name", "passed", "detail"} == set(c) for c in doc["checks"])
