"""Acceptance battery: one test per criterion, one printed line per criterion.

The battery itself lives in :mod:`areapoly.acceptance`; this module runs it
once per session, echoes the per-criterion pass/fail lines, and turns each
result into its own test so a failure names the criterion that broke.
"""

from __future__ import annotations

import sys

import pytest

from areapoly.acceptance import TIME_BUDGET, AcceptanceBattery, CriterionResult


@pytest.fixture(scope="module")
def battery_results(request: pytest.FixtureRequest) -> list[CriterionResult]:
    battery = AcceptanceBattery()
    capture = request.config.pluginmanager.getplugin("capturemanager")
    with capture.global_and_fixture_disabled():
        print()
        results = battery.run_all(sys.stdout)
    return results


@pytest.mark.parametrize("number", range(1, 15))
def test_criterion(battery_results: list[CriterionResult], number: int) -> None:
    result = battery_results[number - 1]
    assert result.number == number
    assert result.passed, f"criterion {number} ({result.title}): {result.detail}"


def test_battery_is_complete(battery_results: list[CriterionResult]) -> None:
    assert [r.number for r in battery_results] == list(range(1, 15))


def test_battery_within_budget(battery_results: list[CriterionResult]) -> None:
    total = sum(r.seconds for r in battery_results)
    assert total < TIME_BUDGET, f"battery took {total:.2f}s of {TIME_BUDGET:.0f}s"
