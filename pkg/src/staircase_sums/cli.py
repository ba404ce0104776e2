"""Command-line front end.

Subcommands: ``runs``, ``partition``, ``count``, ``render``, ``selftest``.
Every subcommand accepts ``--json`` (emit a machine-readable envelope, see
``envelope_schema.json``) and ``--no-timing`` (omit the envelope's timing
field so output bytes are reproducible).

Exit codes: 0 success, 1 internal defect (a checked theorem or invariant
failed), 2 user error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import oracle, render
from .construct import LayerTrace, Partition, difference_pairs, solve
from .runs import (
    ConsecutiveRun,
    Instance,
    check_length_bound,
    enumerate_runs,
    odd_divisors,
    triangular,
)

SCHEMA_VERSION = "1"
DEFAULT_LIST_LIMIT = 20


@dataclass
class CommandOutcome:
    input_echo: dict
    result: dict
    text: str
    code: int = 0


def _blocks_json(partition: Partition) -> dict[str, list[int]]:
    return {str(t): list(partition.blocks[t]) for t in sorted(partition.blocks)}


def _blocks_text(partition: Partition) -> list[str]:
    return [
        f"U_{t} = {{{', '.join(str(e) for e in partition.blocks[t])}}}"
        for t in sorted(partition.blocks)
    ]


def _trace_json(traces: list[LayerTrace]) -> list[dict]:
    out = []
    for tr in traces:
        out.append(
            {
                "n": tr.n,
                "run": {"a": tr.run.a, "b": tr.run.b},
                "s": tr.s,
                "c": tr.c,
                "p_range": list(tr.p_range),
                "q_range": list(tr.q_range),
                "deficits": tr.deficits(),
                "m": tr.m,
                "l": tr.low,
                "assignments": [
                    {"target": asg.target, "pair": list(asg.pair), "kind": asg.kind}
                    for asg in tr.assignments
                ],
            }
        )
    return out


def _trace_text(traces: list[LayerTrace]) -> list[str]:
    lines = []
    for idx, tr in enumerate(traces, start=1):
        deficits = ",".join(str(d) for d in tr.deficits())
        window = f" l={tr.low}" if tr.low is not None else ""
        lines.append(
            f"layer {idx}: n={tr.n} run={tr.run} s={tr.s} c={tr.c} "
            f"P=[{tr.p_range[0]}..{tr.p_range[1]}] Q=[{tr.q_range[0]}..{tr.q_range[1]}] "
            f"deficits=[{deficits}] m={tr.m}{window}"
        )
        for asg in tr.assignments:
            lines.append(
                f"  target {asg.target} <- ({asg.pair[0]}, {asg.pair[1]})  [{asg.kind}]"
            )
    return lines


def cmd_runs(args: argparse.Namespace) -> CommandOutcome:
    value = args.n
    runs = enumerate_runs(value)
    divisor_count = len(odd_divisors(value))
    result = {
        "odd_divisor_count": divisor_count,
        "runs": [{"a": r.a, "b": r.b, "length": r.length()} for r in runs],
    }
    lines = [f"{value} has {len(runs)} consecutive-run representations "
             f"(odd divisors: {divisor_count})"]
    lines.extend(f"  {value} = {r}" for r in runs)
    return CommandOutcome({"n": value}, result, "\n".join(lines))


def cmd_partition(args: argparse.Namespace) -> CommandOutcome:
    inst = Instance(args.n, ConsecutiveRun(args.a, args.b))
    partition, traces = solve(inst, want_trace=args.trace)
    report = oracle.verify(inst.n, inst.run, partition)
    result: dict = {"blocks": _blocks_json(partition), "verified": report.ok}
    if args.trace:
        result["trace"] = _trace_json(traces or [])
    lines = []
    if args.trace:
        lines.extend(_trace_text(traces or []))
    lines.append(f"n = {inst.n}, run = {inst.run}")
    lines.extend(_blocks_text(partition))
    code = 0
    if report.ok:
        lines.append("verified: ok")
    else:
        # cannot happen unless the solver is defective
        lines.append(f"verified: FAILED {report.violations}")
        code = 1
    return CommandOutcome(
        {"n": args.n, "a": args.a, "b": args.b}, result, "\n".join(lines), code
    )


def cmd_count(args: argparse.Namespace) -> CommandOutcome:
    inst = Instance(args.n, ConsecutiveRun(args.a, args.b))
    cap = args.limit if args.limit is not None else DEFAULT_LIST_LIMIT
    count, partitions = oracle.enumerate_all(
        inst, materialize=args.list, cap=cap if args.list else None, force=args.force
    )
    result: dict = {"count": count}
    lines = [f"n = {inst.n}, run = {inst.run}", f"count = {count}"]
    if args.list:
        shown = partitions or []
        result["partitions"] = [_blocks_json(p) for p in shown]
        result["truncated"] = count > len(shown)
        for idx, p in enumerate(shown, start=1):
            lines.append(f"#{idx}: " + "; ".join(_blocks_text(p)))
        if result["truncated"]:
            lines.append(f"... {count - len(shown)} more not shown")
    return CommandOutcome(
        {"n": args.n, "a": args.a, "b": args.b}, result, "\n".join(lines)
    )


def cmd_render(args: argparse.Namespace) -> CommandOutcome:
    if (args.a is None) != (args.b is None):
        raise ValueError("render takes either just n, or n together with both a and b")
    staircase = render.render_staircase(args.n)
    input_echo: dict = {"n": args.n}
    result: dict = {"staircase": staircase.split("\n")}
    text = staircase
    if args.a is not None:
        inst = Instance(args.n, ConsecutiveRun(args.a, args.b))
        partition, _ = solve(inst)
        rebuilt = render.render_rebuilt(partition)
        input_echo = {"n": args.n, "a": args.a, "b": args.b}
        result["rebuilt"] = rebuilt.split("\n")
        text = staircase + "\n\n" + rebuilt
    return CommandOutcome(input_echo, result, text)


def _selftest_checks(max_n: int):
    """Yield (name, cases, failure-description-or-None) per sweep."""

    def sweep_solve() -> tuple[int, str | None]:
        cases = 0
        for n in range(1, max_n + 1):
            for run in enumerate_runs(triangular(n)):
                inst = Instance(n, run)
                if run.a > n and not check_length_bound(inst):
                    return cases, f"length bound failed at n={n}, run={run}"
                partition, _ = solve(inst)
                report = oracle.verify(n, run, partition)
                if not report.ok:
                    return cases, (
                        f"verify failed at n={n}, run={run}: {report.violations[:3]}"
                    )
                cases += 1
        return cases, None

    def sweep_bijection() -> tuple[int, str | None]:
        limit = min(triangular(max_n), 10**5)
        brute_limit = min(limit, 10**4)
        brute = oracle.count_runs_bruteforce_upto(brute_limit)
        for value in range(1, limit + 1):
            runs = enumerate_runs(value)
            expected = len(odd_divisors(value))
            if len(runs) != expected:
                return value, f"run count != odd divisor count at {value}"
            if any(r.sum() != value for r in runs):
                return value, f"run does not sum to {value}"
            if value <= brute_limit and brute[value] != expected:
                return value, f"window scan disagrees at {value}"
        return limit, None

    def sweep_pairs() -> tuple[int, str | None]:
        cases = 0
        for m in range(1, min(max_n, 500) + 1):
            for low in (1, 7, 10**6):
                dp = difference_pairs(m, low)
                values = [v for pair in dp.pairs for v in pair]
                ok = (
                    len(set(values)) == 2 * m
                    and min(values) == low
                    and max(values) <= 2 * m + low
                    and all(hi - lo == i for i, (lo, hi) in enumerate(dp.pairs, 1))
                )
                if not ok:
                    return cases, f"difference pairs broken at m={m}, low={low}"
                cases += 1
        return cases, None

    yield "solve-verify", sweep_solve
    yield "run-bijection", sweep_bijection
    yield "difference-pairs", sweep_pairs


def cmd_selftest(args: argparse.Namespace) -> CommandOutcome:
    if args.max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {args.max_n}")
    checks = []
    lines = [f"selftest max_n={args.max_n}"]
    ok = True
    for name, sweep in _selftest_checks(args.max_n):
        cases, failure = sweep()
        entry: dict = {"name": name, "cases": cases, "ok": failure is None}
        if failure is not None:
            entry["failure"] = failure
            ok = False
            lines.append(f"  {name}: FAIL after {cases} cases: {failure}")
        else:
            lines.append(f"  {name}: {cases} cases ok")
        checks.append(entry)
        if not ok:
            break
    lines.append("all checks passed" if ok else "SELFTEST FAILED")
    return CommandOutcome(
        {"max_n": args.max_n},
        {"ok": ok, "checks": checks},
        "\n".join(lines),
        0 if ok else 1,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a JSON envelope instead of text"
    )
    common.add_argument(
        "--no-timing",
        action="store_true",
        help="omit timing_ms from the JSON envelope (reproducible bytes)",
    )

    parser = argparse.ArgumentParser(
        prog="staircase-sums",
        description=(
            "Enumerate consecutive-run representations of integers and build "
            "partitions of {1..n} realizing them"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("runs", parents=[common],
                       help="all consecutive runs summing to N")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(handler=cmd_runs)

    p = sub.add_parser("partition", parents=[common],
                       help="build one partition of {1..n} realizing targets a..b")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--trace", action="store_true",
                   help="show each layer's intermediate state")
    p.set_defaults(handler=cmd_partition)

    p = sub.add_parser("count", parents=[common],
                       help="exhaustively count all partitions realizing a..b")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--list", action="store_true", help="also print the partitions")
    p.add_argument("--limit", type=int, default=None,
                   help=f"max partitions to list (default {DEFAULT_LIST_LIMIT})")
    p.add_argument("--force", action="store_true",
                   help="override the enumeration hard limit on n")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("render", parents=[common],
                       help="draw the staircase tableau (and the rebuilt one for a..b)")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int, nargs="?", default=None)
    p.add_argument("b", type=int, nargs="?", default=None)
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("selftest", parents=[common],
                       help="run the property sweeps up to max_n")
    p.add_argument("max_n", type=int)
    p.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        outcome = args.handler(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    if args.json:
        envelope: dict = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "input": outcome.input_echo,
            "result": outcome.result,
        }
        if not args.no_timing:
            envelope["timing_ms"] = round(elapsed_ms, 3)
        print(json.dumps(envelope, indent=2))
    else:
        print(outcome.text)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
