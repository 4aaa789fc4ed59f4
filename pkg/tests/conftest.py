from __future__ import annotations

from fractions import Fraction

import pytest

from qmyc.algebra import make_space, tracial_space
from qmyc.graph import complete_graph, empty_graph

F = Fraction


def quantum_spaces():
    """Noncommutative spaces used across the suite: M2, C+M2, C2+M2, non-tracial M2."""
    return {
        "M2": tracial_space([2]),
        "C+M2": tracial_space([1, 2]),
        "C2+M2": tracial_space([1, 1, 2]),
        "M2(1/3,2/3)": make_space([2], [[F(1, 3), F(2, 3)]]),
    }


def quantum_examples():
    out = {}
    for name, sp in quantum_spaces().items():
        out[f"empty {name}"] = empty_graph(sp)
        out[f"complete {name}"] = complete_graph(sp)
        out[f"complete* {name}"] = complete_graph(sp, reflexive=False)
    return out


@pytest.fixture(scope="session")
def qspaces():
    return quantum_spaces()


@pytest.fixture(scope="session")
def qexamples():
    return quantum_examples()


# ----------------------------------------------------------------------------
# acceptance criteria summary

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    number, title = mark.args
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, secs = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status} ({secs:.2f}s) {title}")
