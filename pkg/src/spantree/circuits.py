"""Unit-resistor networks solved by classifying spanning trees.

For a current ``I`` entering at ``a`` and leaving at ``b``, the current along
an oriented edge is ``(tau_plus - tau_minus) / tau * I`` where ``tau_plus``
(``tau_minus``) counts spanning trees whose a-to-b path runs along the edge
forwards (backwards).  All arithmetic is exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InvalidArgument, InvalidTerminals, NotConnected
from .multigraph import EdgeKey, Multigraph
from .oracle import EdgeCopy, enumerate_spanning_trees


class OrientedEdge(NamedTuple):
    tail: int
    head: int
    copy: int = 0

    @property
    def key(self) -> EdgeKey:
        return EdgeKey.of(self.tail, self.head)

    def reversed(self) -> "OrientedEdge":
        return OrientedEdge(self.head, self.tail, self.copy)


@dataclass(frozen=True)
class TreeTally:
    tau_plus: int
    tau_minus: int
    tau_zero: int

    @property
    def total(self) -> int:
        return self.tau_plus + self.tau_minus + self.tau_zero


@dataclass
class CircuitSolution:
    source: int
    sink: int
    total_current: Fraction
    # keyed by canonically oriented copies (low index -> high index)
    currents: dict[OrientedEdge, Fraction]

    def current(self, edge: OrientedEdge) -> Fraction:
        """Current along ``edge`` in its own direction."""
        canon = OrientedEdge(*edge.key, edge.copy)
        value = self.currents[canon]
        return value if canon == edge else -value


def _check_terminals(g: Multigraph, a: int, b: int) -> None:
    for v in (a, b):
        if not 0 <= v < g.n:
            raise InvalidTerminals(f"terminal {v} out of range for n={g.n}")
    if a == b:
        raise InvalidTerminals("source and sink must differ")
    if not g.is_connected():
        raise NotConnected("the network must be connected")


def classify_trees(g: Multigraph, rho: OrientedEdge, a: int, b: int) -> TreeTally:
    _check_terminals(g, a, b)
    if rho.tail == rho.head:
        raise InvalidArgument("the classified edge must not be a loop")
    if rho.copy >= g.multiplicity(rho.tail, rho.head):
        raise InvalidArgument(f"no copy {rho.copy} of edge {rho.tail}-{rho.head}")
    target = EdgeCopy(rho.key, rho.copy)
    plus = minus = zero = 0
    for tree in enumerate_spanning_trees(g):
        step = next(((x, y) for x, y, e in tree.path(a, b) if e == target), None)
        if step is None:
            zero += 1
        elif step == (rho.tail, rho.head):
            plus += 1
        else:
            minus += 1
    return TreeTally(plus, minus, zero)


def edge_currents(g: Multigraph, a: int, b: int, total: Fraction | int = 1) -> CircuitSolution:
    """Exact current on every edge copy, oriented from lower to higher index."""
    _check_terminals(g, a, b)
    total = Fraction(total)
    trees = enumerate_spanning_trees(g)
    # signed tally tau_plus - tau_minus per copy, in canonical orientation
    signed: dict[EdgeCopy, int] = {}
    for tree in trees:
        for x, _, e in tree.path(a, b):
            signed[e] = signed.get(e, 0) + (1 if x == e.key.u else -1)
    count = len(trees)
    currents: dict[OrientedEdge, Fraction] = {}
    for key, m in g.items():
        for c in range(m):
            s = 0 if key.is_loop else signed.get(EdgeCopy(key, c), 0)
            currents[OrientedEdge(key.u, key.v, c)] = Fraction(s, count) * total
    return CircuitSolution(a, b, total, currents)


def verify_kirchhoff(g: Multigraph, sol: CircuitSolution) -> bool:
    """Exact check of the current law at every vertex and the voltage law on every cycle.

    With unit resistances the voltage drop along an edge equals its current,
    so the voltage law holds iff potentials exist; these are propagated along
    a BFS spanning tree and every other edge copy (one fundamental cycle each)
    must agree with them.
    """
    expected = {OrientedEdge(k.u, k.v, c) for k, m in g.items() for c in range(m)}
    if set(sol.currents) != expected:
        raise InvalidArgument("solution edges do not match the graph")
    if not (0 <= sol.source < g.n and 0 <= sol.sink < g.n):
        raise InvalidArgument("solution terminals out of range")

    net = [Fraction(0)] * g.n
    for e, i in sol.currents.items():
        net[e.tail] -= i
        net[e.head] += i
    for v in range(g.n):
        want = Fraction(0)
        if v == sol.source:
            want -= sol.total_current
        if v == sol.sink:
            want += sol.total_current
        if net[v] != want:
            return False

    adj: list[list[OrientedEdge]] = [[] for _ in range(g.n)]
    for e in sol.currents:
        if e.tail != e.head:
            adj[e.tail].append(e)
            adj[e.head].append(e.reversed())
    potential: list[Fraction | None] = [None] * g.n
    tree_edges: set[OrientedEdge] = set()
    for root in range(g.n):
        if potential[root] is not None:
            continue
        potential[root] = Fraction(0)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in adj[x]:
                if potential[e.head] is None:
                    potential[e.head] = potential[x] - sol.current(e)
                    tree_edges.add(OrientedEdge(*e.key, e.copy))
                    queue.append(e.head)
    for e, i in sol.currents.items():
        if e in tree_edges:
            continue
        if potential[e.tail] - potential[e.head] != i:
            return False
    return True
