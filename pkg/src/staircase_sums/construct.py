"""Constructive partition of {1..n} into blocks realizing a consecutive run.

Given a valid instance (1 + ... + n equals a + ... + b), :func:`solve` builds
one block U_t per target t in [a..b] such that the blocks are disjoint, cover
{1..n}, and each sums to its target.  The construction alternates two
reductions:

* a *peel* when a <= n: every target t in [a..n] is met by the singleton {t},
  leaving the smaller instance (a-1, [n+1..b]);
* a *layer* when a > n: the top 2s elements of {1..n} (s = run length) are
  grouped into s pairs each summing to c = 2n - 2s + 1.  Targets below c are
  met exactly by swapping the larger members of two pairs whose difference
  matches the shortfall (the difference-pair construction), which
  simultaneously meets the mirrored target above c.  Leftover pairs go to the
  remaining targets, which stay open and are filled up by deeper layers.

Every intermediate state keeps the pending amounts in a consecutive run whose
sum is the triangular number of the remaining prefix, which is what makes the
recursion close.
"""

from __future__ import annotations

from dataclasses import dataclass

from .runs import ConsecutiveRun, Instance, triangular

MIRROR_LOW = "mirror-low"
MIRROR_HIGH = "mirror-high"
EXACT = "exact"
OPEN = "open"


@dataclass(frozen=True)
class DifferencePairs:
    """m disjoint pairs (x_i, x_i') with x_i' - x_i = i, packed into [low .. 2m+low]."""

    m: int
    low: int
    pairs: tuple[tuple[int, int], ...]


def difference_pairs(m: int, low: int) -> DifferencePairs:
    """Build pairs with differences 1..m inside a window of 2m+1 consecutive integers.

    Odd-indexed pairs nest outward from (ceil(m/2), ceil(m/2)+1); even-indexed
    pairs nest outward from (ceil(m/2)+m, 2m+2-floor(m/2)); everything is then
    shifted so the smallest value is ``low``.  All 2m values are distinct and
    fit in [low, 2m+low].
    """
    if m < 1 or low < 1:
        raise ValueError(f"need m >= 1 and low >= 1, got m={m}, low={low}")
    half_up = (m + 1) // 2
    shift = low - 1
    pairs = []
    for i in range(1, m + 1):
        if i % 2 == 1:
            k = (i - 1) // 2
            lo, hi = half_up - k, half_up + 1 + k
        else:
            k = (i - 2) // 2
            lo, hi = half_up + m - k, 2 * m + 2 - m // 2 + k
        pairs.append((lo + shift, hi + shift))
    return DifferencePairs(m=m, low=low, pairs=tuple(pairs))


@dataclass(frozen=True)
class Assignment:
    """One pair consumed by a layer: target value, its two elements, and how it was used."""

    target: int
    pair: tuple[int, int]
    kind: str  # MIRROR_LOW | MIRROR_HIGH | EXACT | OPEN


@dataclass(frozen=True)
class LayerTrace:
    """Intermediate state of one layer step, kept for explainability and tests."""

    n: int
    run: ConsecutiveRun
    s: int
    c: int
    p_range: tuple[int, int]
    q_range: tuple[int, int]
    m: int
    low: int | None
    assignments: tuple[Assignment, ...]

    def deficits(self) -> list[int]:
        """c - t for each target t, in target order."""
        return [self.c - t for t in self.run.values()]


@dataclass(frozen=True)
class Partition:
    """Blocks keyed by target value; each block is an ascending element tuple.

    Plain container: validity is checked by the independent verifier, not on
    construction.
    """

    n: int
    run: ConsecutiveRun
    blocks: dict[int, tuple[int, ...]]


def peel(inst: Instance) -> tuple[list[tuple[int, tuple[int, ...]]], Instance | None]:
    """Assign the singleton {t} to every target t in [a..n] and reduce.

    Applicable when a <= n.  The leftover problem swaps roles: the unassigned
    prefix {1..a-1} must realize the targets [n+1..b], and since n+1 > a-1 a
    peel never applies twice in a row.  The reduced instance is absent exactly
    when a = 1 (the identity run, everything already assigned).
    """
    n, a, b = inst.n, inst.run.a, inst.run.b
    if a > n:
        raise ValueError(f"peel requires run.a <= n (n={n}, run={inst.run})")
    singles = [(t, (t,)) for t in range(a, n + 1)]
    if a == 1:
        return singles, None
    return singles, Instance(a - 1, ConsecutiveRun(n + 1, b))


def layer(
    inst: Instance,
) -> tuple[
    LayerTrace,
    list[tuple[int, tuple[int, int]]],
    list[tuple[int, tuple[int, int]]],
    Instance | None,
]:
    """One construction round for an instance with a > n.

    Returns ``(trace, closed, open_pairs, reduced)`` where ``closed`` holds
    targets met exactly by a pair, ``open_pairs`` holds targets that received
    a pair summing to c but still need ``t - c`` more, and ``reduced`` is the
    leftover instance over {1..n-2s} (absent when n = 2s).
    """
    n, a, b = inst.n, inst.run.a, inst.run.b
    if a <= n:
        raise ValueError(f"layer requires run.a > n (n={n}, run={inst.run})")
    s = b - a + 1
    assert n >= 2 * s, f"length bound violated for valid instance (n={n}, s={s})"
    c = 2 * n - 2 * s + 1
    m = max(0, c - a)
    assert b - c >= m, "mirror partner targets missing above c"

    assignments: list[Assignment] = []
    closed: list[tuple[int, tuple[int, int]]] = []
    open_pairs: list[tuple[int, tuple[int, int]]] = []
    used_q: set[int] = set()
    window_low: int | None = None

    if m >= 1:
        # 2m+1 consecutive values are guaranteed to fit inside Q; take the
        # topmost such window so the output is uniquely determined.
        assert s >= 2 * m + 1, f"window exceeds Q (s={s}, m={m})"
        window_low = n - 2 * m
        dp = difference_pairs(m, window_low)
        for d, (x, xp) in enumerate(dp.pairs, start=1):
            low_block = (c - xp, x)
            high_block = (c - x, xp)
            closed.append((c - d, low_block))
            closed.append((c + d, high_block))
            assignments.append(Assignment(c - d, low_block, MIRROR_LOW))
            assignments.append(Assignment(c + d, high_block, MIRROR_HIGH))
            used_q.add(x)
            used_q.add(xp)

    leftover_targets = [t for t in range(a, b + 1) if t == c or t - c > m]
    leftover_q = [q for q in range(n - s + 1, n + 1) if q not in used_q]
    assert len(leftover_targets) == len(leftover_q)
    for t, q in zip(leftover_targets, leftover_q):
        pair = (c - q, q)
        if t == c:
            closed.append((t, pair))
            assignments.append(Assignment(t, pair, EXACT))
        else:
            open_pairs.append((t, pair))
            assignments.append(Assignment(t, pair, OPEN))

    reduced = None
    if n - 2 * s > 0:
        reduced = Instance(
            n - 2 * s, ConsecutiveRun(max(m + 1, a - c), b - c)
        )
    else:
        assert not open_pairs, "residual targets but no elements left"

    closed.sort()
    assignments.sort(key=lambda asg: asg.target)
    trace = LayerTrace(
        n=n,
        run=inst.run,
        s=s,
        c=c,
        p_range=(n - 2 * s + 1, n - s),
        q_range=(n - s + 1, n),
        m=m,
        low=window_low,
        assignments=tuple(assignments),
    )
    return trace, closed, open_pairs, reduced


def solve(
    inst: Instance, want_trace: bool = False
) -> tuple[Partition, list[LayerTrace] | None]:
    """Partition {1..n} into blocks summing to each target of the run.

    Deterministic; the same instance always yields the identical partition.
    With ``want_trace`` the per-layer intermediate states are returned as well
    (peels contribute no trace).
    """
    blocks: dict[int, list[int]] = {t: [] for t in inst.run.values()}
    # pending amount still needed -> original target; amounts always form a
    # consecutive run, so they are distinct and safe to key on
    owner: dict[int, int] = {t: t for t in inst.run.values()}
    traces: list[LayerTrace] = []
    cur: Instance | None = inst

    while cur is not None:
        n, run = cur.n, cur.run
        assert sorted(owner) == list(run.values()) and sum(owner) == triangular(n), (
            f"pending amounts out of sync with instance (n={n}, run={run})"
        )
        if run.a <= n:
            singles, reduced = peel(cur)
            for amount, block in singles:
                blocks[owner.pop(amount)].extend(block)
        else:
            trace, closed, open_pairs, reduced = layer(cur)
            if want_trace:
                traces.append(trace)
            for amount, block in closed:
                blocks[owner.pop(amount)].extend(block)
            next_owner: dict[int, int] = {}
            for amount, pair in open_pairs:
                target = owner.pop(amount)
                blocks[target].extend(pair)
                next_owner[amount - trace.c] = target
            assert not owner, "layer left targets unconsumed"
            owner = next_owner
        cur = reduced

    assert not owner, "ran out of elements with targets still pending"
    partition = Partition(
        n=inst.n,
        run=inst.run,
        blocks={t: tuple(sorted(blocks[t])) for t in inst.run.values()},
    )
    return partition, (traces if want_trace else None)
