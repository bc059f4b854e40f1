"""Plain-text graph files.

    # comment
    vertices 4        optional header; otherwise n = 1 + largest index
    0 1               edge
    1 3 2             edge with multiplicity 2
    2 2               loop

Indices are 0-based.  Repeated lines add their multiplicities.
"""

from __future__ import annotations

from .errors import GraphError, ParseError
from .multigraph import Multigraph


def parse_graph(text: str) -> Multigraph:
    n = None
    edges: list[tuple[int, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "vertices":
            if n is not None:
                raise ParseError(lineno, "duplicate vertices header")
            if edges:
                raise ParseError(lineno, "vertices header must precede edges")
            if len(fields) != 2:
                raise ParseError(lineno, "expected 'vertices N'")
            n = _int(fields[1], lineno)
            if n < 1:
                raise ParseError(lineno, f"vertex count must be at least 1, got {n}")
            continue
        if len(fields) not in (2, 3):
            raise ParseError(lineno, f"expected 'u v [mult]', got {line!r}")
        u, v = _int(fields[0], lineno), _int(fields[1], lineno)
        mult = _int(fields[2], lineno) if len(fields) == 3 else 1
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex indices must be nonnegative")
        if mult < 1:
            raise ParseError(lineno, f"multiplicity must be at least 1, got {mult}")
        if n is not None and max(u, v) >= n:
            raise ParseError(lineno, f"vertex {max(u, v)} out of range for {n} vertices")
        edges.append((u, v, mult, lineno))

    if n is None:
        n = 1 + max((max(u, v) for u, v, _, _ in edges), default=0)
    try:
        return Multigraph.from_edges(n, [(u, v, m) for u, v, m, _ in edges])
    except GraphError as exc:  # pragma: no cover - ranges are checked above
        raise ParseError(0, str(exc)) from exc


def serialize_graph(g: Multigraph) -> str:
    lines = [f"vertices {g.n}"]
    for (u, v), m in g.items():
        lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"not an integer: {token!r}") from None
