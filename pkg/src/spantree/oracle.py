"""Brute-force reference counts used to check the fast algorithms.

Nothing here is clever on purpose.  Parallel copies of an edge are
materialized as distinct ``EdgeCopy`` objects so that trees using different
copies are counted separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .errors import TooLarge
from .multigraph import EdgeKey, Multigraph

MAX_COPIES = 24
MAX_COLOR_VERTICES = 8
MAX_COLORS = 6


class EdgeCopy(NamedTuple):
    key: EdgeKey
    copy: int


@dataclass(frozen=True)
class SpanningTree:
    n: int
    edges: tuple[EdgeCopy, ...]

    def keys(self) -> list[EdgeKey]:
        return [e.key for e in self.edges]

    def as_graph(self) -> Multigraph:
        return Multigraph.from_edges(self.n, [tuple(k) for k in self.keys()])

    def path(self, a: int, b: int) -> list[tuple[int, int, EdgeCopy]]:
        """Steps ``(from, to, copy)`` of the unique tree path from a to b."""
        adj: list[list[tuple[int, EdgeCopy]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.key.u].append((e.key.v, e))
            adj[e.key.v].append((e.key.u, e))
        parent: dict[int, tuple[int, EdgeCopy] | None] = {a: None}
        stack = [a]
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if y not in parent:
                    parent[y] = (x, e)
                    stack.append(y)
        steps = []
        x = b
        while parent[x] is not None:
            p, e = parent[x]
            steps.append((p, x, e))
            x = p
        steps.reverse()
        return steps


def edge_copies(g: Multigraph) -> list[EdgeCopy]:
    """Non-loop edge copies in lexicographic order."""
    return [EdgeCopy(k, c) for k, m in g.items() if not k.is_loop for c in range(m)]


def _check_guard(copies: list[EdgeCopy]) -> None:
    if len(copies) > MAX_COPIES:
        raise TooLarge(f"{len(copies)} edge copies exceed the enumeration guard of {MAX_COPIES}")


def enumerate_spanning_trees(g: Multigraph) -> list[SpanningTree]:
    """Every spanning tree, in lexicographic order of its copy list."""
    copies = edge_copies(g)
    _check_guard(copies)
    n = g.n
    need = n - 1
    if len(copies) < need:
        return []

    # union-find without path compression so unions can be undone
    parent = list(range(n))
    size = [1] * n

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    trees: list[SpanningTree] = []
    chosen: list[EdgeCopy] = []

    def extend(start: int) -> None:
        if len(chosen) == need:
            trees.append(SpanningTree(n, tuple(chosen)))
            return
        for i in range(start, len(copies) - (need - len(chosen)) + 1):
            e = copies[i]
            ru, rv = find(e.key.u), find(e.key.v)
            if ru == rv:
                continue
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(e)
            extend(i + 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv

    extend(0)
    return trees


def count_trees_bruteforce(g: Multigraph) -> int:
    return len(enumerate_spanning_trees(g))


def count_colorings_bruteforce(g: Multigraph, k: int) -> int:
    """Number of vertex colourings with ``k`` colours and no monochrome edge."""
    if g.n > MAX_COLOR_VERTICES or k > MAX_COLORS:
        raise TooLarge(f"colouring guard is n <= {MAX_COLOR_VERTICES}, k <= {MAX_COLORS}")
    if g.has_loops():
        return 0
    pairs = list(g.edges)
    return sum(
        1
        for colors in product(range(k), repeat=g.n)
        if all(colors[u] != colors[v] for u, v in pairs)
    )
