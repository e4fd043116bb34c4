import csv
from importlib import resources

import pytest

_acceptance = []


def load_golden():
    text = resources.files("sockmatch").joinpath("data/table1.csv").read_text()
    return {(int(r["n"]), int(r["k"])): int(r["B"]) for r in csv.DictReader(text.splitlines())}


@pytest.fixture(scope="session")
def golden():
    return load_golden()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
