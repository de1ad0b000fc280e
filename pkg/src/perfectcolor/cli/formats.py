"""File formats used by the command line.

ShapeFile
    JSON list of ``[i, j]`` integer pairs.
ConfigFile
    ASCII text, one line per row, one character per cell.  Colors are
    ``0-9`` then ``a-z`` (so at most 36 colors).  The first line is the top
    row ``y = h - 1``; the last line is ``y = 0``.  Blank lines and lines
    starting with ``#`` are ignored.
MatrixFile
    JSON list of ``n`` rows of ``n`` non-negative integers; entry ``[i][j]``
    counts color ``i`` around a cell of color ``j``.
"""

from __future__ import annotations

import json
import string
from pathlib import Path

from ..poly2 import Shape
from ..perfect.torus import TorusConfig

ALPHABET = string.digits + string.ascii_lowercase


class FormatError(ValueError):
    pass


def parse_shape(text: str) -> Shape:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"shape file is not valid JSON: {exc}") from None
    if not isinstance(data, list) or not data:
        raise FormatError("shape file must be a non-empty JSON list of [i, j] pairs")
    pts = []
    for item in data:
        if not (isinstance(item, list) and len(item) == 2 and all(type(v) is int for v in item)):
            raise FormatError(f"bad shape entry {item!r}; expected [i, j] with integers")
        pts.append(tuple(item))
    if len(set(pts)) != len(pts):
        raise FormatError("shape file lists an offset twice")
    return Shape(pts)


def dump_shape(D) -> str:
    return json.dumps([list(u) for u in sorted(D)])


def parse_config(text: str, n=None) -> TorusConfig:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("configuration file has no rows")
    w = len(lines[0])
    if any(len(ln) != w for ln in lines):
        raise FormatError("configuration rows must all have the same length")
    rows = []
    for ln in reversed(lines):
        row = []
        for ch in ln:
            v = ALPHABET.find(ch.lower())
            if v < 0:
                raise FormatError(f"bad color character {ch!r}")
            row.append(v)
        rows.append(row)
    top = max(max(r) for r in rows) + 1
    if n is None:
        n = max(top, 2)
    elif top > n:
        raise FormatError(f"configuration uses {top} colors but only {n} were declared")
    return TorusConfig.from_rows(rows, n)


def dump_config(c: TorusConfig) -> str:
    if c.n > len(ALPHABET):
        raise FormatError("at most 36 colors can be written")
    return "\n".join("".join(ALPHABET[v] for v in row) for row in reversed(c.rows()))


def config_rows_top_first(c: TorusConfig) -> list:
    return dump_config(c).split("\n")


def parse_matrix(text: str) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"matrix file is not valid JSON: {exc}") from None
    n = len(data) if isinstance(data, list) else 0
    if n == 0 or any(not isinstance(r, list) or len(r) != n for r in data):
        raise FormatError("matrix file must be a square JSON list of rows")
    if any(type(v) is not int or v < 0 for r in data for v in r):
        raise FormatError("matrix entries must be non-negative integers")
    return data


def load_shape(path) -> Shape:
    return parse_shape(Path(path).read_text(encoding="utf-8"))


def load_config(path, n=None) -> TorusConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"), n)


def load_matrix(path) -> list:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
