"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with `pytest -v tests/test_acceptance.py -s` to see the lines inline.
Criterion 6 asserts the full 3n/r multi-robot bound for both policies; see
the README for the measured standing of each policy.
"""

import json

import pytest

from patrolsim import verify
from patrolsim.cli import main


def check(result):
    print(result.line())
    assert result.passed, result.detail


def test_criterion_01_coverage():
    check(verify.criterion_coverage())


def test_criterion_02_frequency_bound():
    check(verify.criterion_frequency_bound())


def test_criterion_03_lfve_latency():
    check(verify.criterion_lfve_latency())


def test_criterion_04_quadratic_growth():
    check(verify.criterion_quadratic_growth())


def test_criterion_05_lrv_worst_case():
    check(verify.criterion_lrv_worst_case())


def test_criterion_06_multi_robot_speedup():
    check(verify.criterion_multi_robot_speedup())


def test_criterion_07_flower_ratio():
    check(verify.criterion_flower_ratio())


def test_criterion_08_ownership():
    check(verify.criterion_ownership())


def test_criterion_09_differential():
    check(verify.criterion_differential(500))


def test_criterion_10_cli_determinism(tmp_path):
    scenario = tmp_path / "scenario.json"
    scenario.write_text(json.dumps({
        "graph": {"family": "grid-triangulation", "params": {"w": 5, "h": 5}},
        "policy": "lfv-e",
        "tiebreak": {"kind": "seeded_random", "seed": 3},
        "robots": {"starts": [0, 17], "arrivals": [[10, 30]]},
        "horizon": 2000,
    }))
    outputs = []
    for name in ("first", "second"):
        out_dir = tmp_path / name
        code = main(["simulate", "--scenario", str(scenario),
                     "--out-dir", str(out_dir)])
        assert code == 0
        outputs.append({f: (out_dir / f).read_bytes()
                        for f in ("events.csv", "metrics.csv", "summary.json")})
    identical = outputs[0] == outputs[1]
    detail = ("repeated simulate runs byte-identical" if identical
              else "outputs differ between runs")
    print(f"{'PASS' if identical else 'FAIL'} cli-determinism: {detail}")
    assert identical
