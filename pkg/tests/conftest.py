"""Per-criterion PASS/FAIL summary for the acceptance suite.

Tests marked ``@pytest.mark.criterion(k, "title")`` are grouped by k.  A
criterion passes when all of its tests pass, fails when any of them fails,
and is reported as SKIP when all of its tests were skipped.
"""
from collections import defaultdict

import pytest

_outcomes = defaultdict(list)
_titles = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _titles[number] = title
    if report.when == "call" or report.skipped or report.failed:
        _outcomes[number].append(report.outcome)


def _verdict(outcomes):
    if "failed" in outcomes:
        return "FAIL"
    if all(o == "skipped" for o in outcomes):
        return "SKIP"
    return "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        verdict = _verdict(_outcomes[number])
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {_titles[number]}")
