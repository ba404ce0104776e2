"""Triangular numbers, consecutive runs, and their odd-divisor enumeration.

All arithmetic is checked against the signed 64-bit range: results that would
not fit raise :class:`OverflowError` instead of silently growing into big
integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels

INT64_MAX = 2**63 - 1


def _checked(value: int, what: str) -> int:
    if value > INT64_MAX:
        raise OverflowError(f"{what} exceeds the 64-bit range")
    return value


def triangular(n: int) -> int:
    """Return 1 + 2 + ... + n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _checked(n * (n + 1) // 2, "triangular number")


def is_triangular(value: int) -> int | None:
    """Return the n with triangular(n) == value, or None if there is none."""
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    _checked(value, "value")
    n = (math.isqrt(8 * value + 1) - 1) // 2
    return n if n * (n + 1) // 2 == value else None


@dataclass(frozen=True, order=True)
class ConsecutiveRun:
    """Inclusive interval [a..b] of positive integers, read as the sum a + ... + b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b:
            raise ValueError(f"need 1 <= a <= b, got a={self.a}, b={self.b}")
        _checked(self.b, "run endpoint")
        _checked((self.a + self.b) * (self.b - self.a + 1) // 2, "run sum")

    def length(self) -> int:
        return self.b - self.a + 1

    def sum(self) -> int:
        return (self.a + self.b) * self.length() // 2

    def values(self) -> range:
        return range(self.a, self.b + 1)

    def __str__(self) -> str:
        return f"[{self.a}..{self.b}]"


@dataclass(frozen=True)
class Instance:
    """A prefix length n together with a run whose sum equals triangular(n).

    Construction fails unless 1 + ... + n == a + ... + b, so holding an
    Instance is proof the equality holds.
    """

    n: int
    run: ConsecutiveRun

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if triangular(self.n) != self.run.sum():
            raise ValueError(
                f"not a valid instance: 1+...+{self.n} = {triangular(self.n)} "
                f"but {self.run} sums to {self.run.sum()}"
            )


def odd_divisors(value: int) -> list[int]:
    """All odd d with d | value, ascending."""
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    _checked(value, "value")
    return kernels.odd_divisors(value)


def enumerate_runs(value: int) -> list[ConsecutiveRun]:
    """Every consecutive run summing to ``value``, ascending by first term.

    2*value factors as s*f with s the run length and f = a + b; s and f have
    opposite parity, so each odd divisor of ``value`` is the odd factor of
    exactly one such factorization and yields exactly one run.
    """
    if value < 1:
        raise ValueError(f"value must be >= 1, got {value}")
    _checked(value, "value")
    runs = []
    for d in kernels.odd_divisors(value):
        e = 2 * value // d
        s, f = (d, e) if d < e else (e, d)
        first = (f - s + 1) // 2
        runs.append(ConsecutiveRun(first, first + s - 1))
    runs.sort(key=lambda r: r.a)
    return runs


def check_length_bound(inst: Instance) -> bool:
    """Whether n >= 2 * run.length().

    Defined only for instances whose run starts above n; for those it holds
    for every valid instance (a theorem), so this exists as a test oracle and
    debug assertion rather than something callers need to branch on.
    """
    if inst.run.a <= inst.n:
        raise ValueError(
            f"length bound is defined only for runs starting above n "
            f"(n={inst.n}, run={inst.run})"
        )
    return inst.n >= 2 * inst.run.length()
