import numpy as np
import pytest
from hypothesis import strategies as st

from graphmetric.graph import Digraph

_CRITERIA = {}


def digraphs(max_n=7, min_n=0):
    """Hypothesis strategy for loop-free digraphs."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        rows = []
        for u in range(n):
            row = draw(st.integers(0, (1 << n) - 1)) & ~(1 << u)
            rows.append(row)
        return Digraph(n, tuple(rows))

    return build()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome == "failed":
        _CRITERIA.setdefault(marker, [])
        _CRITERIA[marker].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report.criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcomes in sorted(_CRITERIA.items()):
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {title}")
