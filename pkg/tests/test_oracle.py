import pytest
from hypothesis import given

from conftest import multigraphs
from spantree.errors import TooLarge
from spantree.families import fan
from spantree.multigraph import Multigraph, cycle_graph
from spantree.oracle import (
    count_colorings_bruteforce,
    count_trees_bruteforce,
    edge_copies,
    enumerate_spanning_trees,
)


def test_example_graph_has_five_trees(gamma):
    trees = enumerate_spanning_trees(gamma)
    assert len(trees) == 5
    assert len(set(trees)) == 5
    # every tree uses a-b, the only bridge
    assert all(any(e.key == (0, 1) for e in t.edges) for t in trees)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_cycle_has_n_trees(n):
    assert count_trees_bruteforce(cycle_graph(n)) == n


def test_counts():
    assert count_trees_bruteforce(Multigraph(3)) == 0
    assert count_trees_bruteforce(fan(3)) == 8
    assert count_trees_bruteforce(Multigraph.from_edges(2, [(0, 1, 2)])) == 2
    assert count_trees_bruteforce(Multigraph(1)) == 1


def test_enumeration_is_lexicographic(gamma):
    trees = enumerate_spanning_trees(gamma)
    assert [t.edges for t in trees] == sorted(t.edges for t in trees)


def test_guard():
    g = Multigraph.from_edges(2, [(0, 1, 25)])
    with pytest.raises(TooLarge):
        enumerate_spanning_trees(g)
    # loops do not count toward the guard
    assert count_trees_bruteforce(Multigraph.from_edges(2, [(0, 1, 2), (0, 0, 30)])) == 2


def test_colorings():
    tri = Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert count_colorings_bruteforce(tri, 3) == 6
    assert count_colorings_bruteforce(Multigraph.from_edges(2, [(0, 1)]), 2) == 2
    assert count_colorings_bruteforce(Multigraph.from_edges(2, [(0, 1), (1, 1)]), 5) == 0
    with pytest.raises(TooLarge):
        count_colorings_bruteforce(Multigraph(9), 2)
    with pytest.raises(TooLarge):
        count_colorings_bruteforce(Multigraph(2), 7)


@given(multigraphs())
def test_every_enumerated_tree_is_a_spanning_tree(g):
    for t in enumerate_spanning_trees(g):
        assert len(t.edges) == g.n - 1
        assert t.as_graph().is_tree()
        for e in t.edges:
            assert e.copy < g.multiplicity(*e.key)


@given(multigraphs())
def test_partition_by_edge(g):
    trees = enumerate_spanning_trees(g)
    for e in edge_copies(g):
        with_e = [t for t in trees if e in t.edges]
        without = [t for t in trees if e not in t.edges]
        assert len(with_e) == count_trees_bruteforce(g.contract_edge(e.key))
        assert len(without) == count_trees_bruteforce(g.delete_edge(e.key))
