import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile(
    "ci", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "teardown":
        return
    mark = _CRITERION_OF.get(report.nodeid)
    if mark is None:
        return
    n, text = mark
    entry = _criteria.setdefault(n, {"text": text, "ok": True, "seconds": 0.0})
    if report.when == "call" or report.failed:
        entry["ok"] = entry["ok"] and report.passed
    entry["seconds"] += report.duration


_CRITERION_OF: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERION_OF[item.nodeid] = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status} ({e['seconds']:.1f}s) {e['text']}")
