"""Immutable undirected multigraph with loops and parallel edges.

Vertices are the integers ``0 .. n-1``.  Edges are kept as a mapping from a
normalized key ``(u, v)`` with ``u <= v`` to a positive multiplicity; a key
with ``u == v`` is a loop.  Every structural operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    InvalidArgument,
    InvalidContraction,
    MissingEdge,
    NotConnected,
)


class EdgeKey(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, u: int, v: int) -> "EdgeKey":
        return cls(u, v) if u <= v else cls(v, u)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class Multigraph:
    __slots__ = ("_n", "_edges", "_hash")

    def __init__(self, n: int, edges: dict[EdgeKey, int] | None = None):
        if n < 1:
            raise InvalidArgument(f"a graph needs at least one vertex, got n={n}")
        clean: dict[EdgeKey, int] = {}
        for (u, v), m in (edges or {}).items():
            _check_vertex(n, u)
            _check_vertex(n, v)
            if m < 0:
                raise InvalidArgument(f"negative multiplicity {m}")
            if m:
                key = EdgeKey.of(u, v)
                clean[key] = clean.get(key, 0) + m
        self._n = n
        self._edges = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, edges: dict[EdgeKey, int]) -> "Multigraph":
        # edges already normalized, in range and positive
        g = object.__new__(cls)
        g._n = n
        g._edges = dict(sorted(edges.items()))
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Multigraph":
        """Build from ``(u, v)`` or ``(u, v, mult)`` tuples; repeats add up."""
        acc: dict[EdgeKey, int] = {}
        for e in edges:
            u, v = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            if m < 1:
                raise InvalidArgument(f"multiplicity must be positive, got {m}")
            _check_vertex(n, u)
            _check_vertex(n, v)
            key = EdgeKey.of(u, v)
            acc[key] = acc.get(key, 0) + m
        return cls(n, acc)

    # -- basic accessors --------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> dict[EdgeKey, int]:
        """A copy of the edge multiplicity map, sorted by key."""
        return dict(self._edges)

    def items(self) -> Iterator[tuple[EdgeKey, int]]:
        return iter(self._edges.items())

    def multiplicity(self, u: int, v: int) -> int:
        return self._edges.get(EdgeKey.of(u, v), 0)

    @property
    def total_edges(self) -> int:
        return sum(self._edges.values())

    @property
    def loop_count(self) -> int:
        return sum(m for k, m in self._edges.items() if k.is_loop)

    def has_loops(self) -> bool:
        return any(k.is_loop for k in self._edges)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, tuple(self._edges.items())))
        return self._hash

    def __repr__(self):
        parts = [f"{u}-{v}" + (f"x{m}" if m > 1 else "") for (u, v), m in self._edges.items()]
        return f"Multigraph(n={self._n}, edges=[{', '.join(parts)}])"

    # -- builders ---------------------------------------------------------

    def add_edge(self, u: int, v: int, mult: int = 1) -> "Multigraph":
        _check_vertex(self._n, u)
        _check_vertex(self._n, v)
        if mult < 1:
            raise InvalidArgument(f"multiplicity must be positive, got {mult}")
        edges = dict(self._edges)
        key = EdgeKey.of(u, v)
        edges[key] = edges.get(key, 0) + mult
        return Multigraph(self._n, edges)

    def add_vertex(self) -> "Multigraph":
        return Multigraph(self._n + 1, self._edges)

    # -- local structure --------------------------------------------------

    def degree(self, v: int) -> int:
        _check_vertex(self._n, v)
        d = 0
        for (a, b), m in self._edges.items():
            if a == v:
                d += m
            if b == v:
                d += m
        return d

    def degrees(self) -> list[int]:
        deg = [0] * self._n
        for (a, b), m in self._edges.items():
            deg[a] += m
            deg[b] += m
        return deg

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists of distinct non-loop neighbours."""
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for a, b in self._edges:
            if a != b:
                adj[a].append(b)
                adj[b].append(a)
        return adj

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        adj = self.neighbors()
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # -- structural operations --------------------------------------------

    def delete_edge(self, e: tuple[int, int]) -> "Multigraph":
        key = EdgeKey.of(*e)
        m = self._edges.get(key, 0)
        if m < 1:
            raise MissingEdge(f"no edge {key.u}-{key.v}")
        edges = dict(self._edges)
        if m == 1:
            del edges[key]
        else:
            edges[key] = m - 1
        return Multigraph._trusted(self._n, edges)

    def delete_all(self, e: tuple[int, int]) -> "Multigraph":
        """Remove every parallel copy of ``e``."""
        key = EdgeKey.of(*e)
        if key not in self._edges:
            raise MissingEdge(f"no edge {key.u}-{key.v}")
        edges = dict(self._edges)
        del edges[key]
        return Multigraph._trusted(self._n, edges)

    def contract_edge(self, e: tuple[int, int]) -> "Multigraph":
        """Remove one copy of ``e`` and merge its endpoints.

        The smaller endpoint survives; vertices above the larger one shift
        down by one.  Remaining parallel copies of ``e`` become loops.
        """
        key = EdgeKey.of(*e)
        if key.is_loop:
            raise InvalidContraction(f"cannot contract loop at {key.u}")
        if self._edges.get(key, 0) < 1:
            raise MissingEdge(f"no edge {key.u}-{key.v}")
        keep, gone = key

        def relabel(x: int) -> int:
            if x == gone:
                return keep
            return x - 1 if x > gone else x

        edges: dict[EdgeKey, int] = {}
        for (a, b), m in self._edges.items():
            if (a, b) == key:
                m -= 1
                if not m:
                    continue
            k = EdgeKey.of(relabel(a), relabel(b))
            edges[k] = edges.get(k, 0) + m
        return Multigraph._trusted(self._n - 1, edges)

    def strip_loops(self) -> "Multigraph":
        if not self.has_loops():
            return self
        return Multigraph._trusted(self._n, {k: m for k, m in self._edges.items() if not k.is_loop})

    def prune_leaves(self) -> tuple["Multigraph", int]:
        """Repeatedly drop degree-1 vertices together with their edge."""
        g = self
        pruned = 0
        while g._n > 1:
            deg = g.degrees()
            leaf = next((v for v in range(g._n) if deg[v] == 1), None)
            if leaf is None:
                break
            g = g.remove_vertex(leaf)
            pruned += 1
        return g, pruned

    def remove_vertex(self, v: int) -> "Multigraph":
        """Delete ``v`` and all incident edges, compacting indices."""
        _check_vertex(self._n, v)
        if self._n == 1:
            raise InvalidArgument("cannot remove the only vertex")
        return self.subgraph([x for x in range(self._n) if x != v])

    def subgraph(self, vertices: Iterable[int]) -> "Multigraph":
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        vs = sorted(set(vertices))
        index = {x: i for i, x in enumerate(vs)}
        edges = {
            EdgeKey.of(index[a], index[b]): m
            for (a, b), m in self._edges.items()
            if a in index and b in index
        }
        return Multigraph._trusted(len(vs), edges)

    def relabel(self, perm: list[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise InvalidArgument("relabelling must be a permutation of the vertices")
        return Multigraph(self._n, {EdgeKey.of(perm[a], perm[b]): m for (a, b), m in self._edges.items()})

    # -- global structure -------------------------------------------------

    def bridges(self) -> list[EdgeKey]:
        """Edges of multiplicity one whose removal disconnects the graph."""
        if not self.is_connected():
            raise NotConnected("bridges are defined for connected graphs")
        return self._bridges()

    def _bridges(self) -> list[EdgeKey]:
        # one id per copy; two copies are enough to mark a parallel pair
        ids: list[EdgeKey] = []
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self._n)]
        for key, m in self._edges.items():
            if key.is_loop:
                continue
            for _ in range(min(m, 2)):
                adj[key.u].append((key.v, len(ids)))
                adj[key.v].append((key.u, len(ids)))
                ids.append(key)

        disc = [-1] * self._n
        low = [0] * self._n
        found: list[EdgeKey] = []
        disc[0] = low[0] = 0
        timer = 1
        stack = [(0, -1, iter(adj[0]))]
        while stack:
            x, via, it = stack[-1]
            for y, eid in it:
                if eid == via:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, eid, iter(adj[y])))
                    break
                low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
                    if low[x] > disc[p] and self._edges[ids[via]] == 1:
                        found.append(ids[via])
        return sorted(found)

    def split_at_bridge(self, e: tuple[int, int]) -> tuple["Multigraph", "Multigraph"]:
        """The two islands left after deleting bridge ``e``.

        The island containing the smaller endpoint comes first.
        """
        key = EdgeKey.of(*e)
        if key not in self.bridges():
            raise InvalidArgument(f"{key.u}-{key.v} is not a bridge")
        comps = self.delete_edge(key).components()
        first = next(c for c in comps if key.u in c)
        second = next(c for c in comps if key.v in c)
        return self.subgraph(first), self.subgraph(second)

    def first_betti(self) -> int:
        if not self.is_connected():
            raise NotConnected("first Betti number needs a connected graph")
        return self.total_edges - self._n + 1

    def is_tree(self) -> bool:
        return self.total_edges == self._n - 1 and self.is_connected()


def _check_vertex(n: int, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < n):
        raise InvalidArgument(f"vertex {v!r} out of range for n={n}")


def empty(n: int) -> Multigraph:
    return Multigraph(n)


def path_graph(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Multigraph:
    """Cycle on ``n`` vertices; ``n == 1`` is a loop and ``n == 2`` a double edge."""
    if n == 1:
        return Multigraph.from_edges(1, [(0, 0)])
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def example_graph() -> Multigraph:
    """The four-airport graph: a=0, b=1, c=2, d=3, loop at c, b-d doubled."""
    return Multigraph.from_edges(4, [(0, 1), (1, 2), (1, 3, 2), (2, 3), (2, 2)])
