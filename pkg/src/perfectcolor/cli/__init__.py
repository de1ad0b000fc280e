"""Command line interface and file formats."""

from .formats import (
    FormatError,
    dump_config,
    dump_shape,
    load_config,
    load_matrix,
    load_shape,
    parse_config,
    parse_matrix,
    parse_shape,
)
from .parser import PolySyntaxError, parse_poly

__all__ = [
    "FormatError",
    "PolySyntaxError",
    "dump_config",
    "dump_shape",
    "load_config",
    "load_matrix",
    "load_shape",
    "parse_config",
    "parse_matrix",
    "parse_poly",
    "parse_shape",
]
