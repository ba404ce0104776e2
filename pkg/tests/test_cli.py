"""CLI behavior: golden envelopes, schema validity, exit codes, determinism."""

from __future__ import annotations

import json
from importlib import resources

import jsonschema
import pytest

GOLDEN_COMMANDS = {
    "runs_15.json": ["runs", 15],
    "runs_1.json": ["runs", 1],
    "runs_8.json": ["runs", 8],
    "partition_14_15_20.json": ["partition", 14, 15, 20],
    "partition_14_15_20_trace.json": ["partition", 14, 15, 20, "--trace"],
    "partition_5_1_5.json": ["partition", 5, 1, 5],
    "partition_5_7_8.json": ["partition", 5, 7, 8],
    "count_5_7_8.json": ["count", 5, 7, 8],
    "count_2_3_3.json": ["count", 2, 3, 3],
    "count_5_7_8_list.json": ["count", 5, 7, 8, "--list"],
    "count_14_15_20_list5.json": ["count", 14, 15, 20, "--list", "--limit", 5],
    "render_5.json": ["render", 5],
    "render_1.json": ["render", 1],
    "render_5_7_8.json": ["render", 5, 7, 8],
    "selftest_12.json": ["selftest", 12],
}


@pytest.fixture(scope="module")
def envelope_schema():
    text = resources.files("staircase_sums").joinpath("envelope_schema.json").read_text()
    return json.loads(text)


@pytest.mark.parametrize("golden_name", sorted(GOLDEN_COMMANDS))
def test_golden_envelopes(run_cli, golden_dir, envelope_schema, golden_name):
    args = GOLDEN_COMMANDS[golden_name] + ["--json", "--no-timing"]
    result = run_cli(*args)
    assert result.returncode == 0, result.stderr
    expected = (golden_dir / golden_name).read_text()
    assert result.stdout == expected
    jsonschema.validate(json.loads(result.stdout), envelope_schema)


def test_repeated_runs_are_byte_identical(run_cli):
    for args in (["partition", 14, 15, 20, "--trace"], ["count", 5, 7, 8, "--list"]):
        first = run_cli(*args, "--json", "--no-timing")
        second = run_cli(*args, "--json", "--no-timing")
        assert first.stdout == second.stdout


def test_timing_present_by_default(run_cli, envelope_schema):
    result = run_cli("runs", 15, "--json")
    payload = json.loads(result.stdout)
    assert "timing_ms" in payload
    assert payload["timing_ms"] >= 0
    jsonschema.validate(payload, envelope_schema)


def test_text_and_json_agree_on_blocks(run_cli):
    text = run_cli("partition", 14, 15, 20).stdout
    payload = json.loads(run_cli("partition", 14, 15, 20, "--json").stdout)
    for target, elements in payload["result"]["blocks"].items():
        rendered = f"U_{target} = {{{', '.join(map(str, elements))}}}"
        assert rendered in text
    assert "verified: ok" in text


def test_partition_worked_example_text(run_cli):
    result = run_cli("partition", 14, 15, 20)
    assert result.returncode == 0
    assert "U_20 = {1, 2, 4, 13}" in result.stdout


def test_trace_text_shows_layer_state(run_cli):
    out = run_cli("partition", 14, 15, 20, "--trace").stdout
    assert "s=6 c=17" in out
    assert "P=[3..8] Q=[9..14]" in out
    assert "m=2 l=10" in out
    assert "[mirror-low]" in out and "[open]" in out


def test_render_text_matches_library(run_cli):
    from staircase_sums import render_staircase

    assert run_cli("render", 5).stdout == render_staircase(5) + "\n"


def test_render_pair_has_both_tableaux(run_cli):
    payload = json.loads(run_cli("render", 5, 7, 8, "--json", "--no-timing").stdout)
    assert [len(line) // 4 for line in payload["result"]["rebuilt"]] == [7, 8]
    assert len(payload["result"]["staircase"]) == 5


def test_count_over_limit_is_refused(run_cli):
    result = run_cli("count", 31, 496, 496)
    assert result.returncode == 2
    assert "hard limit" in result.stderr
    forced = run_cli("count", 31, 496, 496, "--force")
    assert forced.returncode == 0
    assert "count = 1" in forced.stdout


def test_enum_hard_limit_env(run_cli):
    result = run_cli("count", 14, 15, 20, env_extra={"ENUM_HARD_LIMIT": "10"})
    assert result.returncode == 2
    result = run_cli("count", 31, 496, 496, env_extra={"ENUM_HARD_LIMIT": "40"})
    assert result.returncode == 0


def test_render_max_width_env(run_cli):
    result = run_cli("render", 20, env_extra={"RENDER_MAX_WIDTH": "10"})
    assert result.returncode == 2


@pytest.mark.parametrize(
    "args",
    [
        ["runs", 0],
        ["partition", 5, 7, 9],
        ["partition", 5, 9, 7],
        ["render", 5, 7],
        ["render", 0],
        ["selftest", 0],
    ],
)
def test_user_errors_exit_2(run_cli, args):
    result = run_cli(*args)
    assert result.returncode == 2
    assert result.stderr


def test_usage_error_exits_2(run_cli):
    assert run_cli("partition", "fourteen", 15, 20).returncode == 2
    assert run_cli("no-such-command").returncode == 2


def test_selftest_passes(run_cli):
    result = run_cli("selftest", 25)
    assert result.returncode == 0
    assert "all checks passed" in result.stdout
