from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(12345)


# one summary line per acceptance criterion
_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = ""
        for key, text in report.user_properties:
            if key == "detail":
                detail = text
        _ACCEPTANCE[name] = (report.outcome.upper(), detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        outcome, detail = _ACCEPTANCE[name]
        tag = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{tag}  {name}  {detail}".rstrip())
