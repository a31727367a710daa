"""Exact face lattices of convex polyhedra.

All arithmetic is over the rationals (see :mod:`polyface._scalar` for the
backend switch); no function in this package uses a tolerance.
"""

from ._scalar import BACKEND, Q
from .errors import InvariantError, ParseError, PolyfaceError, UsageError
from .exactlin import LinRel
from .hrep import HPoly
from .poly import Base, Poly, conv, hp, hs, poly0, polyT, poly_eq, poly_of_base, pt, segm
from .faces import face_set, facets, hull, pdim, vertex_set
from .lattice import build_lattice

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Q", "LinRel", "HPoly", "Poly", "Base",
    "conv", "hp", "hs", "poly0", "polyT", "poly_eq", "poly_of_base", "pt", "segm",
    "face_set", "facets", "hull", "pdim", "vertex_set", "build_lattice",
    "PolyfaceError", "UsageError", "ParseError", "InvariantError",
]
