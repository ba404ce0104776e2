"""Pure-Python backend for the hot loops.

Behaviour (including the enumeration order of ``enumerate_partitions``) must
stay byte-for-byte identical to the compiled backend in ``_kernels_c.pyx``;
the parity tests compare the two directly.
"""

from __future__ import annotations


def odd_divisors(value: int) -> list[int]:
    """All odd divisors of ``value``, ascending."""
    divs = []
    i = 1
    while i <= value // i:
        if value % i == 0:
            if i & 1:
                divs.append(i)
            q = value // i
            if q != i and q & 1:
                divs.append(q)
        i += 1
    divs.sort()
    return divs


def count_consecutive_runs(target: int) -> int:
    """Count windows [a..b] of consecutive positive integers summing to ``target``.

    Sliding-window scan; no divisor arithmetic.
    """
    count = 0
    a = 1
    b = 0
    window = 0
    while a <= target:
        while window < target:
            b += 1
            window += b
        if window == target:
            count += 1
        window -= a
        a += 1
    return count


def count_consecutive_runs_upto(limit: int) -> list[int]:
    """``counts[t]`` = number of consecutive windows summing to t, for t <= limit.

    One pass over every window with sum <= limit; index 0 is unused.
    """
    counts = [0] * (limit + 1)
    for a in range(1, limit + 1):
        total = 0
        for b in range(a, limit + 1):
            total += b
            if total > limit:
                break
            counts[total] += 1
    return counts


def enumerate_partitions(
    n: int, a: int, b: int, cap: int
) -> tuple[int, list[tuple[tuple[int, ...], ...]]]:
    """Count partitions of {1..n} into blocks summing to a, a+1, ..., b.

    Elements are assigned in descending order n..1, branching over targets in
    ascending order, which fixes the discovery order of solutions.  The full
    count is always returned; at most ``cap`` solutions are materialized, each
    as a tuple of per-target element tuples (targets ascending, elements
    ascending).
    """
    s = b - a + 1
    deficits = list(range(a, b + 1))
    assign = [0] * (n + 1)
    out: list[tuple[tuple[int, ...], ...]] = []
    count = 0

    def search(e: int, npos: int) -> None:
        nonlocal count
        if e == 0:
            count += 1
            if len(out) < cap:
                blocks: list[list[int]] = [[] for _ in range(s)]
                for x in range(1, n + 1):
                    blocks[assign[x]].append(x)
                out.append(tuple(tuple(blk) for blk in blocks))
            return
        if npos > e:
            # each remaining element can close at most one positive target
            return
        for ti in range(s):
            d = deficits[ti]
            if d >= e:
                deficits[ti] = d - e
                assign[e] = ti
                search(e - 1, npos - (d == e))
                deficits[ti] = d

    search(n, s)
    return count, out


def count_partitions(n: int, a: int, b: int) -> int:
    """Count-only variant of :func:`enumerate_partitions`."""
    return enumerate_partitions(n, a, b, 0)[0]
