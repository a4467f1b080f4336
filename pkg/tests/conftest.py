import pytest

from csfclaw import graph as gr

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def connected_upto_6():
    return [g for n in range(1, 7) for g in gr.enumerate_connected(n)]


@pytest.fixture(scope="session")
def six_vertex_graphs():
    return {
        "SA33": gr.make_saltire(3, 3),
        "AS33": gr.make_augmented_saltire(3, 3),
        "K33": gr.make_complete_bipartite(3, 3),
        "AK33": gr.make_ak33(),
    }
