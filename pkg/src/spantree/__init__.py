"""Exact spanning-tree counting for multigraphs.

Three independent counters (deletion-contraction, matrix-tree determinant,
brute-force enumeration), generators for classic graph families, chromatic
polynomials and unit-resistor network currents.
"""

from .chromatic import IntPolynomial, chromatic_polynomial, evaluate
from .circuits import CircuitSolution, OrientedEdge, TreeTally, classify_trees, edge_currents, verify_kirchhoff
from .errors import GraphError
from .families import (
    FamilyKind,
    SequenceReport,
    complete,
    complete_bipartite,
    fan,
    fan_closed_form_float,
    fan_prime,
    fibonacci,
    ladder,
    lucas,
    verify_family,
    wheel,
)
from .graphfile import parse_graph, serialize_graph
from .matrixtree import adjacency_matrix, det, kirchhoff_minor, laplacian, tau_mt
from .multigraph import EdgeKey, Multigraph
from .oracle import count_colorings_bruteforce, count_trees_bruteforce, enumerate_spanning_trees
from .treecount import Algorithm, CountStats, tau, tau_bridge_product, tau_dc

__version__ = "0.1.0"
