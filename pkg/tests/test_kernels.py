"""Parity between the compiled kernel lane and the pure-Python fallback."""

from __future__ import annotations

import subprocess
import sys

import pytest

from staircase_sums import _kernels_py, kernels

_compiled = pytest.importorskip(
    "staircase_sums._kernels_c", reason="compiled kernels not built"
)


def test_selected_backend_is_reported():
    assert kernels.backend in ("c", "python")


def test_pure_lane_can_be_forced():
    probe = subprocess.run(
        [sys.executable, "-c", "from staircase_sums import kernels; print(kernels.backend)"],
        capture_output=True,
        text=True,
        env={"STAIRCASE_SUMS_PURE": "1", "PATH": "/usr/bin:/bin"},
    )
    assert probe.stdout.strip() == "python"


def test_odd_divisors_parity():
    for value in range(1, 3001):
        assert _kernels_py.odd_divisors(value) == _compiled.odd_divisors(value)


def test_window_count_parity():
    for value in range(1, 2001):
        assert _kernels_py.count_consecutive_runs(value) == _compiled.count_consecutive_runs(value)
    assert _kernels_py.count_consecutive_runs_upto(2000) == _compiled.count_consecutive_runs_upto(2000)


@pytest.mark.parametrize(
    "n,a,b",
    [(1, 1, 1), (5, 7, 8), (5, 1, 5), (8, 11, 13), (10, 9, 13), (12, 18, 21)],
)
def test_census_parity_counts_and_order(n, a, b):
    pure = _kernels_py.enumerate_partitions(n, a, b, 10**6)
    compiled = _compiled.enumerate_partitions(n, a, b, 10**6)
    assert pure == compiled
    assert _kernels_py.count_partitions(n, a, b) == compiled[0]


def test_census_parity_respects_cap():
    pure = _kernels_py.enumerate_partitions(12, 25, 27, 7)
    compiled = _compiled.enumerate_partitions(12, 25, 27, 7)
    assert pure == compiled
    assert len(pure[1]) == 7
    assert pure[0] == 593
