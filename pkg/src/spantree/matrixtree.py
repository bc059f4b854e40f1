"""Adjacency, Laplacian and Kirchhoff-minor matrices, and exact determinants.

Matrices are plain ``list[list[int]]``; every function returns fresh lists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument, MustStripLoops, TooSmall
from .multigraph import Multigraph

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class KirchhoffMinor:
    matrix: IntMatrix
    removed_vertex: int


def adjacency_matrix(g: Multigraph) -> IntMatrix:
    """Entry (i, j) is the number of edges joining i and j.

    A loop sits on the diagonal with its multiplicity, so the matrix still
    determines the graph.
    """
    a = [[0] * g.n for _ in range(g.n)]
    for (u, v), m in g.items():
        a[u][v] += m
        if u != v:
            a[v][u] += m
    return a


def laplacian(g: Multigraph) -> IntMatrix:
    if g.has_loops():
        raise MustStripLoops("laplacian needs a loopless graph; call strip_loops() first")
    lap = [[-x for x in row] for row in adjacency_matrix(g)]
    for v, d in enumerate(g.degrees()):
        lap[v][v] = d
    return lap


def kirchhoff_minor(g: Multigraph, removed: int | None = None) -> KirchhoffMinor:
    """Laplacian with row and column ``removed`` (default: last vertex) deleted."""
    if g.n < 2:
        raise TooSmall("a Kirchhoff minor needs at least two vertices")
    if removed is None:
        removed = g.n - 1
    if not 0 <= removed < g.n:
        raise InvalidArgument(f"vertex {removed} out of range for n={g.n}")
    lap = laplacian(g)
    keep = [i for i in range(g.n) if i != removed]
    return KirchhoffMinor([[lap[i][j] for j in keep] for i in keep], removed)


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    All intermediate divisions are exact, so entries stay integers whose
    size is bounded by minors of the input.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidArgument("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def tau_mt(g: Multigraph) -> int:
    """Spanning-tree count as the determinant of the Kirchhoff minor."""
    g = g.strip_loops()
    if g.n == 1:
        return 1
    return det(kirchhoff_minor(g).matrix)
