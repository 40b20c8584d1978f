"""Alexander-type polynomials of Eulerian digraphs.

The polynomial ``P_D(t) = sum_k c_k t^k`` counts spanning trees of an
Eulerian digraph by how many edges point away from a root.  The package
computes it in several independent ways and relates it to the Kauffman
and Crowell state sums of the special alternating link built from a plane
bipartite graph.
"""

from .alexander import pd, pd_determinant, pd_direct, pd_inclusion_exclusion
from .errors import (
    EmbeddingError,
    EulerianAlexanderError,
    InconsistencyError,
    InputError,
    InvariantViolation,
    PreconditionError,
)
from .formats import load_bipartite, load_digraph, parse_bipartite, parse_digraph
from .graphs import Digraph, EulerianDigraph, HalfEdge, PlanarBipartiteGraph, RotationSystem, transpose
from .polynomials import IntPoly, canonical, equiv_up_to_units

__all__ = [
    "pd",
    "pd_determinant",
    "pd_direct",
    "pd_inclusion_exclusion",
    "EulerianAlexanderError",
    "InputError",
    "EmbeddingError",
    "PreconditionError",
    "InconsistencyError",
    "InvariantViolation",
    "load_digraph",
    "load_bipartite",
    "parse_digraph",
    "parse_bipartite",
    "Digraph",
    "EulerianDigraph",
    "HalfEdge",
    "PlanarBipartiteGraph",
    "RotationSystem",
    "transpose",
    "IntPoly",
    "canonical",
    "equiv_up_to_units",
]

__version__ = "0.1.0"
