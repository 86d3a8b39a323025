import pytest

from turanlab.graph import Graph, complete_bipartite


@pytest.fixture
def k3():
    return Graph.complete(3)


@pytest.fixture
def p3():
    return Graph.path(3)


@pytest.fixture
def k32():
    return complete_bipartite(5)


_ACCEPTANCE = []


@pytest.fixture
def acceptance_line():
    """Record a one-line verdict printed in the terminal summary."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}" + (f" ({detail})" if detail else ""))
