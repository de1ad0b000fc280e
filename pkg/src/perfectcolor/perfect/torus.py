"""Configurations on a ``w x h`` torus and their local statistics.

A :class:`TorusConfig` stands for the configuration of Z^2 with periods
``(w, 0)`` and ``(0, h)``.  Cell ``(x, y)`` is stored at index ``y*w + x``.

All neighborhood statistics require the offsets of the shape to be distinct
modulo ``(w, h)``; :func:`check_torus` enforces this and :func:`fit_torus`
finds the smallest multiple of a torus that satisfies it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..poly2 import LaurentPoly2, characteristic_poly


class TorusTooSmall(ValueError):
    def __init__(self, w: int, h: int, collisions: list):
        self.collisions = collisions
        pairs = ", ".join(f"{a}~{b}" for a, b in collisions[:6])
        super().__init__(f"torus too small for shape: {w}x{h} identifies offsets {pairs}")


@dataclass(frozen=True)
class TorusConfig:
    width: int
    height: int
    colors: tuple
    n: int = 2

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("torus dimensions must be positive")
        if self.n < 1:
            raise ValueError("alphabet size must be positive")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.colors) != self.width * self.height:
            raise ValueError(f"expected {self.width * self.height} colors, got {len(self.colors)}")
        if any(c < 0 or c >= self.n for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.n - 1}")

    @classmethod
    def from_function(cls, w: int, h: int, fn, n: int = 2) -> "TorusConfig":
        return cls(w, h, tuple(fn(x, y) for y in range(h) for x in range(w)), n)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: Optional[int] = None) -> "TorusConfig":
        """Build from rows listed bottom (y = 0) first."""
        h = len(rows)
        w = len(rows[0]) if rows else 0
        if any(len(r) != w for r in rows):
            raise ValueError("configuration rows must have equal length")
        flat = tuple(c for r in rows for c in r)
        if n is None:
            n = max(flat) + 1 if flat else 1
        return cls(w, h, flat, n)

    def __getitem__(self, cell) -> int:
        x, y = cell
        return self.colors[(y % self.height) * self.width + (x % self.width)]

    def rows(self) -> list:
        w = self.width
        return [self.colors[y * w:(y + 1) * w] for y in range(self.height)]

    def translate(self, dx: int, dy: int) -> "TorusConfig":
        """The translate ``c'(u) = c(u - (dx, dy))``."""
        return TorusConfig.from_function(
            self.width, self.height, lambda x, y: self[x - dx, y - dy], self.n
        )

    def tile(self, kx: int, ky: int) -> "TorusConfig":
        """Same Z^2 configuration written on the ``kx*w x ky*h`` torus."""
        return TorusConfig.from_function(
            self.width * kx, self.height * ky, lambda x, y: self[x, y], self.n
        )

    def cells(self):
        for y in range(self.height):
            for x in range(self.width):
                yield x, y


def collisions(D, w: int, h: int) -> list:
    seen: dict = {}
    out = []
    for u in sorted(D):
        key = (u[0] % w, u[1] % h)
        if key in seen:
            out.append((seen[key], u))
        else:
            seen[key] = u
    return out


def check_torus(D, w: int, h: int) -> None:
    bad = collisions(D, w, h)
    if bad:
        raise TorusTooSmall(w, h, bad)


def fit_torus(D, w: int, h: int) -> tuple:
    """Smallest multipliers ``(kx, ky)`` (by area, then kx) making ``D`` fit on ``kx*w x ky*h``."""
    xs = [u[0] for u in D]
    ys = [u[1] for u in D]
    # any torus wider and taller than the shape's bounding box works
    kx_max = -(-(max(xs) - min(xs) + 1) // w)
    ky_max = -(-(max(ys) - min(ys) + 1) // h)
    best = None
    for kx in range(1, kx_max + 1):
        for ky in range(1, ky_max + 1):
            if not collisions(D, kx * w, ky * h):
                key = (kx * ky, kx, ky)
                if best is None or key < best:
                    best = key
    return best[1], best[2]


def neighborhood_counts(c: TorusConfig, D, cell) -> tuple:
    """Number of cells of each color in ``cell + D``."""
    check_torus(D, c.width, c.height)
    x, y = cell
    counts = [0] * c.n
    for dx, dy in D:
        counts[c[x + dx, y + dy]] += 1
    return tuple(counts)


def _all_counts(c: TorusConfig, D) -> list:
    check_torus(D, c.width, c.height)
    offs = sorted(D)
    out = []
    for x, y in c.cells():
        counts = [0] * c.n
        for dx, dy in offs:
            counts[c[x + dx, y + dy]] += 1
        out.append(tuple(counts))
    return out


@dataclass(frozen=True)
class ColoringMatrix:
    """``entries[i][j]``: cells of color ``i`` around a cell of color ``j``.

    Columns of colors that never occur are ``None`` in every row and listed
    in ``absent``.
    """

    entries: tuple
    absent: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        n = len(self.entries)
        if any(len(r) != n for r in self.entries):
            raise ValueError("coloring matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def column_sums(self) -> list:
        return [None if j in self.absent else sum(self.column(j)) for j in range(self.n)]

    def as_lists(self) -> list:
        return [list(r) for r in self.entries]


def extract_matrix(c: TorusConfig, D) -> Optional[ColoringMatrix]:
    """Matrix of ``c`` as a ``D``-perfect coloring, or ``None`` if it is not one."""
    cols: dict = {}
    for color, counts in zip(c.colors, _all_counts(c, D)):
        seen = cols.setdefault(color, counts)
        if seen != counts:
            return None
    absent = frozenset(j for j in range(c.n) if j not in cols)
    entries = [[cols[j][i] if j in cols else None for j in range(c.n)] for i in range(c.n)]
    return ColoringMatrix(entries, absent)


def periodic_product(f: LaurentPoly2, c: TorusConfig) -> list:
    """Coefficients of ``f * c`` on the torus, indexed like ``c.colors``.

    ``(f c)(u) = sum_e f_e * c(u - e)``.
    """
    out = []
    terms = list(f.items())
    for x, y in c.cells():
        out.append(sum(coef * c[x - i, y - j] for (i, j), coef in terms))
    return out


def covering_identity_holds(c: TorusConfig, D, b: int, a: int) -> bool:
    """Does ``(f_D - (b - a)) c == a`` hold at every cell?"""
    check_torus(D, c.width, c.height)
    g = characteristic_poly(D) - (b - a)
    return all(v == a for v in periodic_product(g, c))


def verify_covering(c: TorusConfig, D, b: int, a: int) -> bool:
    """Is ``c`` a ``(D, b, a)``-covering?

    Counts ones around every cell directly, then confirms the answer with the
    polynomial identity; a disagreement is an internal error.
    """
    if c.n != 2:
        raise ValueError("coverings need a binary alphabet")
    direct = all(
        counts[1] == (b if color == 1 else a) for color, counts in zip(c.colors, _all_counts(c, D))
    )
    if direct != covering_identity_holds(c, D, b, a):
        raise AssertionError("direct count and convolution identity disagree")
    return direct


def abelian_complexity(c: TorusConfig, D) -> int:
    return len(set(_all_counts(c, D)))


def pattern_complexity(c: TorusConfig, D) -> int:
    check_torus(D, c.width, c.height)
    offs = sorted(D)
    return len({tuple(c[x + dx, y + dy] for dx, dy in offs) for x, y in c.cells()})


def minimal_periods(c: TorusConfig) -> set:
    """All nonzero ``(dx, dy)`` with ``0 <= dx < w``, ``0 <= dy < h`` fixing ``c``."""
    w, h = c.width, c.height
    out = set()
    for dy in range(h):
        for dx in range(w):
            if (dx, dy) == (0, 0):
                continue
            if all(c[x + dx, y + dy] == c[x, y] for x, y in c.cells()):
                out.add((dx, dy))
    return out

