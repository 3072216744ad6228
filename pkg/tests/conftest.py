import pytest
from hypothesis import strategies as st

from spectral_iso.graph import Graph, Permutation

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(e for e, keep in zip(pairs, mask) if keep))


@st.composite
def graph_and_perm(draw, min_n=0, max_n=9):
    g = draw(graphs(min_n, max_n))
    img = draw(st.permutations(list(range(g.n))))
    return g, Permutation(tuple(img))


P3 = Graph.path(3)
K3 = Graph.complete(3)
C4 = Graph.cycle(4)
C5 = Graph.cycle(5)
