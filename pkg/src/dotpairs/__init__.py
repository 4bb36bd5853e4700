"""Exact counting of planar point triples (p, q, r) with p.q = alpha and
p.r = beta, plus the constructions and diagnostics around it."""

from .counting import (DotPair, IncidenceProfile, PairClassification, count_bruteforce,
                       count_via_ab, incidence_profile, verify_general_bound)
from .geometry import (CanonicalLine, Point, PointSet, RadialDirection, alpha_line, dot,
                       lines_coincide, parse_rational, radial_direction, squared_distance)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CanonicalLine", "DotPair", "IncidenceProfile", "PairClassification",
    "Point", "PointSet", "RadialDirection", "alpha_line", "count_bruteforce",
    "count_via_ab", "dot", "incidence_profile", "lines_coincide", "parse_rational",
    "radial_direction", "squared_distance", "verify_general_bound",
]
