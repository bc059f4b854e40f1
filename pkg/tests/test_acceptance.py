"""Exit criteria for the package; each test prints one PASS/FAIL line in the summary."""

import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

from spantree import matrixtree
from spantree.chromatic import chromatic_polynomial, evaluate
from spantree.circuits import OrientedEdge, edge_currents, verify_kirchhoff
from spantree.corpus import connected_corpus, corpus
from spantree.families import (
    complete,
    complete_bipartite,
    fan,
    fan_closed_form_float,
    fibonacci,
    ladder,
    lucas,
    wheel,
)
from spantree.matrixtree import adjacency_matrix, det, kirchhoff_minor, laplacian, tau_mt
from spantree.multigraph import Multigraph, example_graph
from spantree.oracle import count_colorings_bruteforce, count_trees_bruteforce
from spantree.treecount import Algorithm, tau, tau_bridge_product, tau_dc

DATA = Path(__file__).parent / "data"
SEED = 20240601
CORPUS = corpus(SEED, 250, max_vertices=4, max_total=8)


def test_ac01_running_example():
    """AC01 running example: tau = 5 by all three algorithms, each under 10 ms"""
    g = example_graph()
    for algo in (Algorithm.ENUMERATION, Algorithm.DELETION_CONTRACTION, Algorithm.MATRIX_TREE):
        best = float("inf")
        for _ in range(5):
            t0 = time.perf_counter()
            value = tau(g, algo)
            best = min(best, time.perf_counter() - t0)
            assert value == 5
        assert best < 0.010, (algo, best)


def test_ac02_matrix_fixtures():
    """AC02 adjacency, Laplacian and Kirchhoff minor match the displayed matrices; det K = 5"""
    g = example_graph().strip_loops()
    assert adjacency_matrix(g) == [[0, 1, 0, 0], [1, 0, 1, 2], [0, 1, 0, 1], [0, 2, 1, 0]]
    assert laplacian(g) == [[1, -1, 0, 0], [-1, 4, -1, -2], [0, -1, 2, -1], [0, -2, -1, 3]]
    k = kirchhoff_minor(g).matrix
    assert k == [[1, -1, 0], [-1, 4, -1], [0, -1, 2]]
    assert det(k) == 5


def test_ac03_determinant_worked_example():
    """AC03 det of 4x4 (diag 4, off-diag -1) = 125; identity det = 1 for orders 1..8"""
    assert det([[4 if i == j else -1 for j in range(4)] for i in range(4)]) == 125 == 5**3
    for n in range(1, 9):
        assert det([[int(i == j) for j in range(n)] for i in range(n)]) == 1


def test_ac04_fans():
    """AC04 fans: tau = F(2n) for n=1..12, a(n+1)=3a(n)-a(n-1), float closed form within 1e-9 to n=30"""
    a = [None] + [tau(fan(n)) for n in range(1, 13)]
    assert all(a[n] == fibonacci(2 * n) for n in range(1, 13))
    assert all(a[n + 1] == 3 * a[n] - a[n - 1] for n in range(2, 12))
    for n in range(1, 31):
        exact = fibonacci(2 * n)
        approx = fan_closed_form_float(n)
        assert round(approx) == exact
        assert abs(approx - exact) / exact < 1e-9


def test_ac05_ladders():
    """AC05 ladders: tau = 1,4,15,56,209,780,2911 for n=1..7; b(n+1)=4b(n)-b(n-1) for n=2..10"""
    b = [None] + [tau(ladder(n)) for n in range(1, 12)]
    assert b[1:8] == [1, 4, 15, 56, 209, 780, 2911]
    assert all(b[n + 1] == 4 * b[n] - b[n - 1] for n in range(2, 11))


def test_ac06_wheels():
    """AC06 wheels: c1=1, c2=5, c(n)=L(2n)-2, four-term recurrence, cross identity with fans"""
    c = [None] + [tau(wheel(n)) for n in range(1, 12)]
    a = [None] + [tau(fan(n)) for n in range(1, 12)]
    assert c[1] == 1 and c[2] == 5
    assert all(c[n] == lucas(2 * n) - 2 for n in range(1, 11))
    assert all(c[n + 1] == 4 * c[n] - 4 * c[n - 1] + c[n - 2] for n in range(3, 11))
    assert all(c[n + 1] - a[n + 1] == c[n] + a[n] for n in range(1, 11))


def test_ac07_cayley():
    """AC07 Cayley: tau(K_n) = n^(n-2) for n=1..10 via the matrix-tree path"""
    for n in range(1, 11):
        assert tau_mt(complete(n)) == (1 if n == 1 else n ** (n - 2))
    assert tau_mt(complete(10)) == 100000000


def test_ac08_bipartite():
    """AC08 bipartite: tau(K_{m,n}) = m^(n-1) n^(m-1) for 1 <= m, n <= 6"""
    for m in range(1, 7):
        for n in range(1, 7):
            assert tau(complete_bipartite(m, n)) == m ** (n - 1) * n ** (m - 1)


def test_ac09_cross_algorithm_corpus():
    """AC09 >=200 seeded random multigraphs: enumeration = deletion-contraction = matrix-tree"""
    assert len(CORPUS) >= 200
    assert any(g.has_loops() for g in CORPUS)
    assert any(m > 1 for g in CORPUS for k, m in g.items() if not k.is_loop)
    for g in CORPUS:
        assert g.n <= 4 and g.total_edges <= 8
        assert count_trees_bruteforce(g) == tau_dc(g)[0] == matrixtree.tau_mt(g), g


def test_ac10_pointwise_identities():
    """AC10 deletion-plus-contraction for every non-loop edge, loop/leaf insensitivity, bridge product"""
    bridged = 0
    for g in CORPUS:
        t = tau_dc(g)[0]
        for key, _ in g.items():
            if not key.is_loop:
                assert t == tau_dc(g.delete_edge(key))[0] + tau_dc(g.contract_edge(key))[0]
        for v in range(g.n):
            assert tau_dc(g.add_edge(v, v))[0] == t
            assert tau_dc(g.add_vertex().add_edge(v, g.n))[0] == t
        if g.is_connected():
            for b in g.bridges():
                bridged += 1
                assert tau_bridge_product(g, b) == t
    assert bridged > 0


def test_ac11_chromatic():
    """AC11 chromatic polynomial = brute-force colouring counts (k<=4), deletion-minus-contraction, loops give 0"""
    looped = 0
    for g in CORPUS:
        assert g.n <= 5
        p = chromatic_polynomial(g)
        for k in range(5):
            assert evaluate(p, k) == count_colorings_bruteforce(g, k)
        if g.has_loops():
            looped += 1
            assert p.is_zero()
            continue
        for key, _ in g.items():
            rest = chromatic_polynomial(g.delete_edge(key))
            merged = chromatic_polynomial(g.contract_edge(key))
            for k in range(6):
                assert evaluate(p, k) == evaluate(rest, k) - evaluate(merged, k)
    assert looped > 0


def test_ac12_circuits():
    """AC12 triangle currents 2/3 and 1/3; Kirchhoff verified exactly on 50 connected instances; perturbations rejected"""
    tri = Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    total = Fraction(7, 3)
    sol = edge_currents(tri, 0, 1, total)
    assert sol.currents[OrientedEdge(0, 1)] == Fraction(2, 3) * total
    assert sol.current(OrientedEdge(0, 2)) == sol.current(OrientedEdge(2, 1)) == Fraction(1, 3) * total
    assert verify_kirchhoff(tri, sol)

    instances = connected_corpus(SEED, 50, max_vertices=4, max_total=8)
    assert len(instances) == 50
    for i, g in enumerate(instances):
        a, b = 0, g.n - 1
        sol = edge_currents(g, a, b, Fraction(i + 1, 3))
        assert verify_kirchhoff(g, sol)
        for e in list(sol.currents):
            sol.currents[e] += Fraction(1, 1000)
            assert not verify_kirchhoff(g, sol)
            sol.currents[e] -= Fraction(1, 1000)


def test_ac13_cli():
    """AC13 CLI: count on the fixture prints 5; selfcheck --seed 42 --cases 200 exits 0, bit-reproducible"""
    cmd = [sys.executable, "-m", "spantree"]
    proc = subprocess.run(cmd + ["count", str(DATA / "example.graph")], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5\n"
    runs = [
        subprocess.run(cmd + ["selfcheck", "--seed", "42", "--cases", "200"], capture_output=True)
        for _ in range(2)
    ]
    assert all(r.returncode == 0 for r in runs)
    assert runs[0].stdout == runs[1].stdout
    assert b"200 agree, 0 disagree" in runs[0].stdout
