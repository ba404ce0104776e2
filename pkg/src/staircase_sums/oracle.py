"""Independent checking and exhaustive census of block partitions.

Nothing here shares code with :mod:`staircase_sums.construct`: verification is
plain set arithmetic and the census is a standalone backtracking search, so
either side can catch the other out.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import kernels
from .construct import Partition
from .runs import ConsecutiveRun, Instance

DEFAULT_ENUM_LIMIT = 30
BRUTEFORCE_MAX = 10**6

# finding tags used in VerifyReport.violations
MISSING_ELEMENT = "missing-element"
DUPLICATE_ELEMENT = "duplicate-element"
FOREIGN_ELEMENT = "foreign-element"
WRONG_SUM = "wrong-sum"
WRONG_TARGET_SET = "wrong-target-set"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a partition check; ok iff there are no violations."""

    ok: bool
    violations: tuple[tuple, ...]


def verify(n: int, run: ConsecutiveRun, partition: Partition) -> VerifyReport:
    """Check a claimed partition of {1..n} against the run's contract.

    Deliberately accepts arbitrary partitions; findings are data, never
    exceptions.  Violations are tagged tuples:

    * ``(WRONG_TARGET_SET, symmetric difference...)`` -- keys differ from [a..b]
    * ``(WRONG_SUM, target, actual)`` -- a block does not sum to its key
    * ``(DUPLICATE_ELEMENT, e)`` -- e appears in more than one block
    * ``(MISSING_ELEMENT, e)`` -- e in {1..n} appears in no block
    * ``(FOREIGN_ELEMENT, e)`` -- e outside {1..n} appears in some block
    """
    violations: list[tuple] = []
    expected_targets = set(run.values())
    actual_targets = set(partition.blocks)
    if actual_targets != expected_targets:
        diff = tuple(sorted(actual_targets ^ expected_targets))
        violations.append((WRONG_TARGET_SET,) + diff)

    seen: set[int] = set()
    duplicates: set[int] = set()
    for t in sorted(partition.blocks):
        block = partition.blocks[t]
        if sum(block) != t:
            violations.append((WRONG_SUM, t, sum(block)))
        for e in block:
            if e in seen:
                duplicates.add(e)
            seen.add(e)
    for e in sorted(duplicates):
        violations.append((DUPLICATE_ELEMENT, e))

    universe = set(range(1, n + 1))
    for e in sorted(universe - seen):
        violations.append((MISSING_ELEMENT, e))
    for e in sorted(seen - universe):
        violations.append((FOREIGN_ELEMENT, e))

    return VerifyReport(ok=not violations, violations=tuple(violations))


def hard_limit() -> int:
    """Enumeration size guard, overridable via ENUM_HARD_LIMIT."""
    raw = os.environ.get("ENUM_HARD_LIMIT")
    if raw is None or raw == "":
        return DEFAULT_ENUM_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ENUM_HARD_LIMIT must be an integer, got {raw!r}") from None


def enumerate_all(
    inst: Instance,
    materialize: bool = False,
    cap: int | None = None,
    force: bool = False,
) -> tuple[int, list[Partition] | None]:
    """Count every partition of {1..n} realizing the instance's run.

    The search assigns elements in descending order n..1 to targets with
    sufficient remaining capacity, branching over targets in ascending order;
    that fixes the enumeration order.  The count is always exact; with
    ``materialize`` the first ``cap`` partitions (all of them when ``cap`` is
    None) are returned as well.

    The search is exponential, so n above the hard limit (default
    ``DEFAULT_ENUM_LIMIT``, see ENUM_HARD_LIMIT) is refused unless ``force``
    is set.
    """
    limit = hard_limit()
    if inst.n > limit and not force:
        raise ValueError(
            f"n={inst.n} exceeds the enumeration hard limit {limit}; "
            f"raise ENUM_HARD_LIMIT or force the run to override"
        )
    if not materialize:
        cap_eff = 0
    elif cap is None:
        cap_eff = 2**62
    else:
        cap_eff = max(0, cap)
    count, raw = kernels.enumerate_partitions(inst.n, inst.run.a, inst.run.b, cap_eff)
    if not materialize:
        return count, None
    partitions = [
        Partition(inst.n, inst.run, dict(zip(inst.run.values(), blocks)))
        for blocks in raw
    ]
    return count, partitions


def count_runs_bruteforce(value: int) -> int:
    """Count pairs a <= b with a + ... + b == value by a sliding-window scan.

    Shares no divisor arithmetic with :func:`staircase_sums.runs.enumerate_runs`,
    so it serves as the oracle side of the odd-divisor bijection.
    """
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    if value > BRUTEFORCE_MAX:
        raise ValueError(f"value must be <= {BRUTEFORCE_MAX}, got {value}")
    return kernels.count_consecutive_runs(value)


def count_runs_bruteforce_upto(limit: int) -> list[int]:
    """Window-scan counts for every value <= limit in a single pass.

    ``result[v] == count_runs_bruteforce(v)`` for 1 <= v <= limit (index 0 is
    unused); the per-value equivalence is pinned by tests.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > BRUTEFORCE_MAX:
        raise ValueError(f"limit must be <= {BRUTEFORCE_MAX}, got {limit}")
    return kernels.count_consecutive_runs_upto(limit)
