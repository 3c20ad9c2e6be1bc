import numpy as np
import pytest

from crimefca import datasets, enumerate_concepts


@pytest.fixture(scope="session")
def table1():
    return datasets.load_table1()


@pytest.fixture(scope="session")
def table2():
    return datasets.load_table2()


@pytest.fixture(scope="session")
def lattice1(table1):
    return enumerate_concepts(table1)


@pytest.fixture
def rng():
    return np.random.default_rng(20131018)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            number, title = value
            _criteria[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title}")
