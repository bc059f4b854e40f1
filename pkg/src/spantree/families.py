"""Parametric graph families and checks of their tree-count sequences.

fan(n)       hub joined to every vertex of a path on n vertices
fan_prime(n) fan(n) with the last spoke doubled
ladder(n)    the 2 x n grid
wheel(n)     hub joined to every vertex of an n-cycle (n=1: loop rim, n=2: double-edge rim)
complete(n), complete_bipartite(m, n)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgument
from .multigraph import Multigraph, cycle_graph
from .treecount import tau


class FamilyKind(str, enum.Enum):
    FAN = "fan"
    FAN_PRIME = "fan_prime"
    LADDER = "ladder"
    WHEEL = "wheel"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "bipartite"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            value = value.replace("-", "_")
            return cls.__members__.get(value.upper()) or next(
                (m for m in cls if m.value == value), None
            )
        return None


@dataclass
class SequenceReport:
    name: str
    values: list[int]
    recurrence_ok: bool | None
    closed_form_ok: bool | None
    # indices (1-based) where a check failed, for diagnostics
    failures: list[str]

    @property
    def ok(self) -> bool:
        return self.recurrence_ok is not False and self.closed_form_ok is not False


def _positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise InvalidArgument(f"{what} must be at least 1, got {n}")


def fan(n: int) -> Multigraph:
    _positive(n)
    # hub is vertex 0, path is 1..n
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(1, n)]
    return Multigraph.from_edges(n + 1, edges)


def fan_prime(n: int) -> Multigraph:
    _positive(n)
    return fan(n).add_edge(0, n)


def ladder(n: int) -> Multigraph:
    _positive(n)
    # rails 0..n-1 and n..2n-1, rung i joins i and n+i
    edges = [(i, n + i) for i in range(n)]
    edges += [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    return Multigraph.from_edges(2 * n, edges)


def wheel(n: int) -> Multigraph:
    _positive(n)
    rim = cycle_graph(n)
    edges = [(u + 1, v + 1, m) for (u, v), m in rim.items()]
    edges += [(0, i) for i in range(1, n + 1)]
    return Multigraph.from_edges(n + 1, edges)


def complete(n: int) -> Multigraph:
    _positive(n)
    return Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Multigraph:
    _positive(m, "m")
    _positive(n, "n")
    return Multigraph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F(1) = F(2) = 1.  F(0) = 0 is accepted for internal use."""
    if n < 0:
        raise InvalidArgument(f"Fibonacci index must be nonnegative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """L(n) = F(n-1) + F(n+1), so L(1) = 1, L(2) = 3, L(3) = 4."""
    _positive(n)
    return fibonacci(n - 1) + fibonacci(n + 1)


def fan_closed_form_float(n: int) -> float:
    r5 = math.sqrt(5.0)
    return ((3 + r5) / 2) ** n / r5 - ((3 - r5) / 2) ** n / r5


def family_graph(kind: FamilyKind | str, n: int, m: int | None = None) -> Multigraph:
    kind = FamilyKind(kind)
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return complete_bipartite(n if m is None else m, n)
    return {
        FamilyKind.FAN: fan,
        FamilyKind.FAN_PRIME: fan_prime,
        FamilyKind.LADDER: ladder,
        FamilyKind.WHEEL: wheel,
        FamilyKind.COMPLETE: complete,
    }[kind](n)


def family_values(kind: FamilyKind | str, up_to: int, m: int | None = None) -> list[int]:
    """tau of members 1..up_to, computed with the automatic dispatcher."""
    return [tau(family_graph(kind, i, m)) for i in range(1, up_to + 1)]


def verify_family(kind: FamilyKind | str, up_to: int, m: int | None = None) -> SequenceReport:
    """Compute tau for members 1..up_to and check the known recurrence and closed form.

    A flag is ``None`` when the family has no check of that kind.  For the
    bipartite family ``m`` fixes the first part; without it the sequence
    runs along the diagonal m = n.
    """
    kind = FamilyKind(kind)
    minimum = 4 if kind is FamilyKind.WHEEL else 3
    if up_to < minimum:
        raise InvalidArgument(f"{kind.value} verification needs up_to >= {minimum}")

    vals = family_values(kind, up_to, m)
    v = [None] + vals  # 1-based
    failures: list[str] = []

    def check(label: str, ok: bool) -> bool:
        if not ok:
            failures.append(label)
        return ok

    rec = closed = None
    if kind is FamilyKind.FAN:
        rec = all([check(f"a{i+1}=3a{i}-a{i-1}", v[i + 1] == 3 * v[i] - v[i - 1]) for i in range(2, up_to)])
        closed = all([check(f"a{i}=F{2*i}", v[i] == fibonacci(2 * i)) for i in range(1, up_to + 1)])
    elif kind is FamilyKind.FAN_PRIME:
        a = [None] + family_values(FamilyKind.FAN, up_to)
        rec = all([check(f"a'{i}=a{i}+a'{i-1}", v[i] == a[i] + v[i - 1]) for i in range(2, up_to + 1)])
        closed = all([check(f"a'{i}=F{2*i+1}", v[i] == fibonacci(2 * i + 1)) for i in range(1, up_to + 1)])
    elif kind is FamilyKind.LADDER:
        rec = all([check(f"b{i+1}=4b{i}-b{i-1}", v[i + 1] == 4 * v[i] - v[i - 1]) for i in range(2, up_to)])
    elif kind is FamilyKind.WHEEL:
        rec = all(
            [
                check(f"c{i+1}=4c{i}-4c{i-1}+c{i-2}", v[i + 1] == 4 * v[i] - 4 * v[i - 1] + v[i - 2])
                for i in range(3, up_to)
            ]
        )
        a = [None] + family_values(FamilyKind.FAN, up_to)
        lucas_ok = all([check(f"c{i}=L{2*i}-2", v[i] == lucas(2 * i) - 2) for i in range(1, up_to + 1)])
        cross_ok = all(
            [check(f"c{i+1}-a{i+1}=c{i}+a{i}", v[i + 1] - a[i + 1] == v[i] + a[i]) for i in range(1, up_to)]
        )
        closed = lucas_ok and cross_ok
    elif kind is FamilyKind.COMPLETE:
        closed = all([check(f"tau(K{i})={i}^{i-2}", v[i] == _cayley(i)) for i in range(1, up_to + 1)])
    else:
        parts = [(i if m is None else m, i) for i in range(1, up_to + 1)]
        closed = all([check(f"tau(K{p},{q})", v[q] == _bipartite(p, q)) for p, q in parts])
    return SequenceReport(kind.value, vals, rec, closed, failures)


def _cayley(n: int) -> int:
    # n^(n-2) with the n=1 case equal to 1
    return 1 if n == 1 else n ** (n - 2)


def _bipartite(m: int, n: int) -> int:
    return m ** (n - 1) * n ** (m - 1)
