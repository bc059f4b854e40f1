"""Spanning-tree counts by deletion-plus-contraction, plus a dispatcher.

The recursion uses ``tau(G) = tau(G - e) + tau(G / e)`` for a non-loop edge
``e``, after three reductions that leave the count unchanged: dropping loops,
pruning degree-1 vertices, and factoring across a bridge.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from . import matrixtree, oracle
from .errors import InvalidArgument
from .multigraph import EdgeKey, Multigraph

AUTO_ENUM_MAX_EDGES = 12
AUTO_DC_MAX_BETTI = 10


class Algorithm(str, enum.Enum):
    AUTO = "auto"
    DELETION_CONTRACTION = "dc"
    MATRIX_TREE = "matrix"
    ENUMERATION = "enum"

    @classmethod
    def _missing_(cls, value):
        # accept the long member names too, e.g. "matrix_tree"
        if isinstance(value, str):
            return cls.__members__.get(value.upper())
        return None


@dataclass
class CountStats:
    recursion_nodes: int = 0
    reductions: Counter = field(default_factory=Counter)

    def merge(self, other: "CountStats") -> None:
        self.recursion_nodes += other.recursion_nodes
        self.reductions.update(other.reductions)


def pivot_edge(g: Multigraph) -> EdgeKey | None:
    """Smallest non-loop key among those of maximal multiplicity."""
    best = None
    best_m = 0
    for key, m in g.items():
        if not key.is_loop and m > best_m:
            best, best_m = key, m
    return best


def tau_dc(g: Multigraph) -> tuple[int, CountStats]:
    stats = CountStats()
    return _dc(g, stats), stats


def _dc(g: Multigraph, stats: CountStats) -> int:
    stats.recursion_nodes += 1
    if not g.is_connected():
        return 0
    if g.has_loops():
        stats.reductions["loop"] += g.loop_count
        g = g.strip_loops()
    g, pruned = g.prune_leaves()
    if pruned:
        stats.reductions["leaf"] += pruned
    if g.n == 1:
        return 1
    bridges = g._bridges()  # connectivity already established
    if bridges:
        stats.reductions["bridge"] += 1
        b = bridges[0]
        comps = g.delete_edge(b).components()
        left = g.subgraph(next(c for c in comps if b.u in c))
        right = g.subgraph(next(c for c in comps if b.v in c))
        return _dc(left, stats) * _dc(right, stats)
    e = pivot_edge(g)
    return _dc(g.delete_edge(e), stats) + _dc(g.contract_edge(e), stats)


def choose_algorithm(g: Multigraph) -> Algorithm:
    if g.total_edges <= AUTO_ENUM_MAX_EDGES:
        return Algorithm.ENUMERATION
    if not g.is_connected() or g.first_betti() <= AUTO_DC_MAX_BETTI:
        return Algorithm.DELETION_CONTRACTION
    return Algorithm.MATRIX_TREE


def tau(g: Multigraph, algorithm: Algorithm | str = Algorithm.AUTO) -> int:
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.AUTO:
        algorithm = choose_algorithm(g)
    if algorithm is Algorithm.ENUMERATION:
        return oracle.count_trees_bruteforce(g)
    if algorithm is Algorithm.DELETION_CONTRACTION:
        return tau_dc(g)[0]
    return matrixtree.tau_mt(g)


def tau_bridge_product(g: Multigraph, e: tuple[int, int]) -> int:
    """tau(G) computed as the product over the two islands of bridge ``e``."""
    key = EdgeKey.of(*e)
    if not g.is_connected() or key not in g.bridges():
        raise InvalidArgument(f"{key.u}-{key.v} is not a bridge")
    left, right = g.split_at_bridge(key)
    return tau(left) * tau(right)
