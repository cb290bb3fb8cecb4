import sys

import pytest

from latnull import load_fixture


def fixture_lattice(name):
    doc = load_fixture(name)
    return doc.lattice(), doc.zero


@pytest.fixture
def m3():
    return fixture_lattice("M3")[0]


@pytest.fixture
def grid23():
    return fixture_lattice("GRID23")[0]


@pytest.fixture
def obstruct9():
    return fixture_lattice("OBSTRUCT9")[0]


@pytest.fixture
def kite7():
    return fixture_lattice("KITE7")[0]


@pytest.fixture
def ladder7():
    return fixture_lattice("LADDER7")[0]


@pytest.fixture
def ladder8():
    return fixture_lattice("LADDER8")[0]


@pytest.fixture
def chain3():
    return fixture_lattice("CHAIN3")[0]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
