import pytest

from causal_betweenness import REICHENBACH, TernaryRelation


def closed(m, *triples):
    return TernaryRelation(m, frozenset(triples) | {(c, b, a) for a, b, c in triples})


A, B, C, D = 1, 2, 3, 4

# {D,A} -> {D,B} -> {D,C} -> {D,A}
CYCLE3 = closed(4, (D, A, B), (D, B, C), (D, C, A))
# {A,B} -> {B,C} -> {C,D} -> {D,A} -> {A,B}
CYCLE4 = closed(4, (C, A, B), (D, B, C), (A, C, D), (B, D, A))


@pytest.fixture
def reichenbach():
    return REICHENBACH


@pytest.fixture
def cycle3():
    return CYCLE3


@pytest.fixture
def cycle4():
    return CYCLE4


_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _RESULTS.append((mark.args[0], mark.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
