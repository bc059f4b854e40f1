from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from spantree.multigraph import Multigraph, example_graph


@pytest.fixture
def gamma():
    """The four-airport graph: a=0, b=1, c=2, d=3."""
    return example_graph()


@pytest.fixture
def triangle():
    return Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@st.composite
def multigraphs(draw, max_vertices=4, max_edges=8, loops=True, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_edges)) if n > 1 or loops else []
    return Multigraph.from_edges(n, edges)


def leibniz_det(m):
    """Determinant as the signed sum over permutations."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def connected_by_bfs(n, pairs):
    """Connectivity of an edge list, independent of Multigraph."""
    adj = {v: set() for v in range(n)}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    todo = [0]
    while todo:
        x = todo.pop()
        for y in adj[x] - seen:
            seen.add(y)
            todo.append(y)
    return len(seen) == n


def interpolate(points):
    """Coefficients (low to high) of the polynomial through ``points``."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, b in enumerate(basis):
            coeffs[t] += yi * b / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return [int(c) for c in coeffs]


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run tests marked slow")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive sweeps, run with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_acceptance: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc in _acceptance:
        terminalreporter.write_line(f"{status}  {doc}")
