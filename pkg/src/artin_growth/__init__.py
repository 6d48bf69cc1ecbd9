"""Growth of right-angled Artin monoids: counts, Hilbert series and certified root bounds."""

__version__ = "0.1.0"

from .coxeter import INF, CoxeterGraph, Family, FamilyId, build_family, parse_graph, presentation, rightangle
from .errors import CertificationError, ChainViolation, GuardExceeded, InconclusiveError, UnsupportedGraph
from .polynomial import IntPolynomial

__all__ = [
    "INF",
    "CoxeterGraph",
    "Family",
    "FamilyId",
    "IntPolynomial",
    "build_family",
    "parse_graph",
    "presentation",
    "rightangle",
    "CertificationError",
    "ChainViolation",
    "GuardExceeded",
    "InconclusiveError",
    "UnsupportedGraph",
]
