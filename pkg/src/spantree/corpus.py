"""Seeded random multigraphs for cross-checking the counting algorithms."""

from __future__ import annotations

import random

from .multigraph import Multigraph


def random_multigraph(
    rng: random.Random,
    max_vertices: int = 4,
    max_total: int = 8,
    loops: bool = True,
) -> Multigraph:
    """A multigraph with 1..max_vertices vertices and 0..max_total edge copies.

    Endpoints are drawn uniformly, so parallel edges are common; loops
    appear only when ``loops`` is set and both endpoints coincide.
    """
    n = rng.randint(1, max_vertices)
    total = rng.randint(0, max_total)
    edges = []
    for _ in range(total):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and not loops:
            continue
        edges.append((u, v))
    return Multigraph.from_edges(n, edges)


def corpus(seed: int, cases: int, **kwargs) -> list[Multigraph]:
    rng = random.Random(seed)
    return [random_multigraph(rng, **kwargs) for _ in range(cases)]


def connected_corpus(seed: int, cases: int, min_vertices: int = 2, **kwargs) -> list[Multigraph]:
    """Like :func:`corpus` but keeps only connected graphs with enough vertices."""
    rng = random.Random(seed)
    out: list[Multigraph] = []
    while len(out) < cases:
        g = random_multigraph(rng, **kwargs)
        if g.n >= min_vertices and g.is_connected():
            out.append(g)
    return out
