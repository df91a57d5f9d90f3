"""Shared fixtures: arrangements are expensive, so build each once per session."""

from __future__ import annotations

import time

import pytest

from brillouin import (
    PerturbationConfig,
    build,
    integer_window,
    perturb,
    zone_reports,
)


@pytest.fixture(scope="session")
def arr3():
    return build(integer_window(3))


@pytest.fixture(scope="session")
def arr5():
    return build(integer_window(5))


@pytest.fixture(scope="session")
def arr9_timed():
    t0 = time.perf_counter()
    arr = build(integer_window(9))
    return arr, time.perf_counter() - t0


@pytest.fixture(scope="session")
def arr9(arr9_timed):
    return arr9_timed[0]


@pytest.fixture(scope="session")
def reports9(arr9):
    return zone_reports(arr9, arr9.kmax_reliable)


def _perturbed(q: int):
    return build(perturb(PerturbationConfig(m=9, q=q, seed=101)))


@pytest.fixture(scope="session")
def arr9_q200():
    return _perturbed(200)


@pytest.fixture(scope="session")
def arr9_q1000():
    return _perturbed(1000)


@pytest.fixture(scope="session")
def arr9_q5000():
    return _perturbed(5000)


@pytest.fixture(scope="session")
def reports9_q200(arr9_q200):
    return zone_reports(arr9_q200, arr9_q200.kmax_reliable)


@pytest.fixture(scope="session")
def reports9_q1000(arr9_q1000):
    return zone_reports(arr9_q1000, arr9_q1000.kmax_reliable)


@pytest.fixture(scope="session")
def reports9_q5000(arr9_q5000):
    return zone_reports(arr9_q5000, arr9_q5000.kmax_reliable)
