"""Acceptance battery: the nine self-check criteria under hard time budgets.

Each test prints one pass/fail line straight to the terminal (bypassing
capture) so a scan of the run log shows the verdicts at a glance. Criteria
share one context, mirroring how run_battery executes them; criterion 9
replays the entire battery twice and must stay within twice the single-run
cost, so it reuses the timings collected here when available.
"""

import time

import pytest

from limitlearn import run_suite
from limitlearn.suite import (
    SuiteContext,
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
)

_TIMINGS: dict[int, float] = {}


@pytest.fixture(scope="module")
def ctx():
    return SuiteContext(seed=0)


def _run(number: int, fn, ctx, budget: float, capsys) -> None:
    start = time.perf_counter()
    result = fn(ctx)
    elapsed = time.perf_counter() - start
    _TIMINGS[number] = elapsed
    ok = result["status"] == "PASS" and elapsed < budget
    with capsys.disabled():
        print(
            f"criterion {number} {result['name']}: {'PASS' if ok else 'FAIL'}"
            f" ({elapsed:.2f}s, budget {budget:.0f}s)"
        )
    assert result["status"] == "PASS", result["details"]
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s"


def test_criterion_1_codecs(ctx, capsys):
    _run(1, criterion_1, ctx, 1.0, capsys)


def test_criterion_2_monotone_enumeration(ctx, capsys):
    _run(2, criterion_2, ctx, 10.0, capsys)


def test_criterion_3_chain_and_reverify(ctx, capsys):
    _run(3, criterion_3, ctx, 60.0, capsys)


def test_criterion_4_convergence_and_growing_gap(ctx, capsys):
    _run(4, criterion_4, ctx, 120.0, capsys)


def test_criterion_5_forced_vacillation(ctx, capsys):
    _run(5, criterion_5, ctx, 30.0, capsys)


def test_criterion_6_family_learnability(ctx, capsys):
    _run(6, criterion_6, ctx, 120.0, capsys)


def test_criterion_7_confirmation_vs_subtraction(ctx, capsys):
    _run(7, criterion_7, ctx, 30.0, capsys)


def test_criterion_8_strict_implies_loose(ctx, capsys):
    _run(8, criterion_8, ctx, 30.0, capsys)


def test_criterion_9_deterministic_replay(capsys):
    start = time.perf_counter()
    report, all_pass = run_suite(0)
    elapsed = time.perf_counter() - start
    criteria = report["results"]["criteria"]
    replay = criteria[-1]
    ok = all_pass and replay["details"]["identical"]
    single = sum(_TIMINGS.values())
    if single:
        # two battery runs plus comparison: allow 2x plus generous slack
        budget = 2.0 * single + 0.5 * single + 10.0
    else:
        budget = 240.0  # criterion run in isolation, no baseline to compare
    ok = ok and elapsed < budget
    with capsys.disabled():
        print(
            f"criterion 9 {replay['name']}: {'PASS' if ok else 'FAIL'}"
            f" ({elapsed:.2f}s, budget {budget:.0f}s)"
        )
    assert all_pass, [c for c in criteria if c["status"] != "PASS"]
    assert replay["details"]["identical"] is True
    assert elapsed < budget, f"replay took {elapsed:.2f}s, budget {budget:.2f}s"
