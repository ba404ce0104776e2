# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backend for the hot loops; mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport free, malloc


def odd_divisors(long long value):
    """All odd divisors of ``value``, ascending."""
    cdef long long i = 1
    cdef long long q
    divs = []
    while i <= value // i:
        if value % i == 0:
            if i & 1:
                divs.append(i)
            q = value // i
            if q != i and (q & 1):
                divs.append(q)
        i += 1
    divs.sort()
    return divs


def count_consecutive_runs(long long target):
    """Count windows [a..b] of consecutive positive integers summing to ``target``."""
    cdef long long count = 0
    cdef long long a = 1
    cdef long long b = 0
    cdef long long window = 0
    while a <= target:
        while window < target:
            b += 1
            window += b
        if window == target:
            count += 1
        window -= a
        a += 1
    return count


def count_consecutive_runs_upto(long long limit):
    """``counts[t]`` = number of consecutive windows summing to t, for t <= limit."""
    cdef long long *buf = <long long *> malloc((limit + 1) * sizeof(long long))
    cdef long long a, b, total
    if buf == NULL:
        raise MemoryError()
    try:
        for a in range(limit + 1):
            buf[a] = 0
        for a in range(1, limit + 1):
            total = 0
            for b in range(a, limit + 1):
                total += b
                if total > limit:
                    break
                buf[total] += 1
        return [buf[a] for a in range(limit + 1)]
    finally:
        free(buf)


cdef long long _search(int e, long long *deficits, int s, int npos, int *assign,
                       long long cap, list out, int n, long long count):
    cdef int ti, x
    cdef long long d
    if e == 0:
        count += 1
        if <long long> len(out) < cap:
            blocks = [[] for _ in range(s)]
            for x in range(1, n + 1):
                (<list> blocks[assign[x]]).append(x)
            out.append(tuple(tuple(blk) for blk in blocks))
        return count
    if npos > e:
        # each remaining element can close at most one positive target
        return count
    for ti in range(s):
        d = deficits[ti]
        if d >= e:
            deficits[ti] = d - e
            assign[e] = ti
            count = _search(e - 1, deficits, s, npos - (d == e), assign,
                            cap, out, n, count)
            deficits[ti] = d
    return count


def enumerate_partitions(int n, int a, int b, long long cap):
    """Count partitions of {1..n} into blocks summing to a, a+1, ..., b.

    Same contract and enumeration order as the pure-Python backend.
    """
    cdef int s = b - a + 1
    cdef long long *deficits = <long long *> malloc(s * sizeof(long long))
    cdef int *assign = <int *> malloc((n + 1) * sizeof(int))
    cdef int i
    cdef long long count
    if deficits == NULL or assign == NULL:
        free(deficits)
        free(assign)
        raise MemoryError()
    out = []
    try:
        for i in range(s):
            deficits[i] = a + i
        count = _search(n, deficits, s, s, assign, cap, out, n, 0)
        return count, out
    finally:
        free(deficits)
        free(assign)


def count_partitions(int n, int a, int b):
    """Count-only variant of :func:`enumerate_partitions`."""
    return enumerate_partitions(n, a, b, 0)[0]
