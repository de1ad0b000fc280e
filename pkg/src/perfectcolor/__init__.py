"""Forced periodicity of two-dimensional perfect colorings, in exact arithmetic."""

from .poly2 import LaurentPoly2, Shape, characteristic_poly, dilation
from .unipoly import UniPoly, cyclotomic, gcd_primitive, phi
from .geometry import Direction, convex_hull, edge_pair_directions, is_convex, outer_edge_directions
from .linefactor import critical_t, fiber_set, has_line_factor, line_factor_directions

__version__ = "0.1.0"
