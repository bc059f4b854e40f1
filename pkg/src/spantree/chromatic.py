"""Chromatic polynomials by deletion-minus-contraction."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .multigraph import EdgeKey, Multigraph


class IntPolynomial:
    """Dense integer polynomial in one variable; ``coeffs[i]`` multiplies k**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, k: int) -> int:
        return evaluate(self, k)

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("k" if p == 1 else f"k^{p}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def evaluate(p: IntPolynomial, k: int) -> int:
    value = 0
    for c in reversed(p.coeffs):
        value = value * k + c
    return value


def falling_factorial(n: int) -> IntPolynomial:
    """k (k-1) ... (k-n+1), the chromatic polynomial of the complete graph."""
    out = IntPolynomial([1])
    for i in range(n):
        out = out * IntPolynomial([-i, 1])
    return out


def chromatic_polynomial(g: Multigraph) -> IntPolynomial:
    if g.has_loops():
        return IntPolynomial()
    return _chi(g.n, frozenset(g.edges))


@lru_cache(maxsize=65536)
def _chi(n: int, edges: frozenset[EdgeKey]) -> IntPolynomial:
    if not edges:
        return IntPolynomial.monomial(n)
    u, v = e = min(edges)
    rest = edges - {e}
    # contracting a simple edge merges v into u; parallels collapse, no loops arise
    merged = set()
    for a, b in rest:
        a = u if a == v else (a - 1 if a > v else a)
        b = u if b == v else (b - 1 if b > v else b)
        merged.add(EdgeKey.of(a, b))
    return _chi(n, rest) - _chi(n - 1, frozenset(merged))


def tree_polynomial(n: int) -> IntPolynomial:
    """k (k-1)^(n-1), expanded by the binomial theorem."""
    coeffs = [0] * (n + 1)
    for i in range(n):
        coeffs[i + 1] = comb(n - 1, i) * (-1) ** (n - 1 - i)
    return IntPolynomial(coeffs)
