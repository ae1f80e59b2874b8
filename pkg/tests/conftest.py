import random

import pytest

from mechrobust.graph import from_edge_list

_criteria = {}


def random_small_graph(rng: random.Random, n_max=8):
    n = rng.randint(1, n_max)
    p = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return n, edges


@pytest.fixture
def p3():
    return from_edge_list(3, [(0, 1), (1, 2)])


@pytest.fixture
def star5():
    return from_edge_list(5, [(0, i) for i in range(1, 5)])


def complete(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    status = "SKIP" if report.skipped else "PASS" if report.passed else "FAIL"
    prev = _criteria.get(crit)
    if prev is None or prev[0] == "PASS" or status == "FAIL":
        _criteria[crit] = (status, dict(report.user_properties).get("criterion_text", ""))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, text = _criteria[num]
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {text}")


@pytest.fixture(autouse=True)
def _criterion_props(request):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        request.node.user_properties.append(("criterion", m.args[0]))
        request.node.user_properties.append(("criterion_text", m.args[1]))
