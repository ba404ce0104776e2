#!/usr/bin/env python3
"""Compare the compiled kernel lane against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from staircase_sums import _kernels_py

try:
    from staircase_sums import _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn) -> tuple[float, object]:
    started = time.perf_counter()
    result = fn()
    return time.perf_counter() - started, result


def cases(quick: bool):
    divisor_limit = 20_000 if quick else 100_000
    window_value = 10**5 if quick else 10**6
    yield (
        f"odd_divisors sweep to {divisor_limit}",
        lambda k: sum(len(k.odd_divisors(v)) for v in range(1, divisor_limit + 1)),
    )
    yield (
        f"count_consecutive_runs({window_value})",
        lambda k: k.count_consecutive_runs(window_value),
    )
    yield (
        "count_consecutive_runs_upto(10**4)",
        lambda k: sum(k.count_consecutive_runs_upto(10**4)),
    )
    yield (
        "count_partitions(12, 18, 21)",
        lambda k: k.count_partitions(12, 18, 21),
    )
    yield (
        "count_partitions(14, 15, 20)",
        lambda k: k.count_partitions(14, 15, 20),
    )
    if not quick:
        yield (
            "count_partitions(17, 23, 28)",
            lambda k: k.count_partitions(17, 23, 28),
        )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels not built; timing the pure lane only")

    header = f"{'case':<40} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in cases(args.quick):
        pure_t, pure_v = _time(lambda: fn(_kernels_py))
        if _kernels_c is None:
            print(f"{name:<40} {pure_t:>10.3f} {'-':>13} {'-':>8}   = {pure_v}")
            continue
        comp_t, comp_v = _time(lambda: fn(_kernels_c))
        if pure_v != comp_v:
            print(f"{name:<40} LANE MISMATCH: {pure_v!r} != {comp_v!r}")
            return 1
        speedup = pure_t / comp_t if comp_t > 0 else float("inf")
        print(f"{name:<40} {pure_t:>10.3f} {comp_t:>13.3f} {speedup:>7.1f}x   = {comp_v}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
