from __future__ import annotations

import enum
from collections import deque

from ..poly2 import Shape

_SQUARE = ((1, 0), (-1, 0), (0, 1), (0, -1))


class GridKind(enum.Enum):
    """Translation invariant grid graphs on Z^2, given by their edge offsets."""

    SQUARE = "square"
    TRIANGULAR = "triangular"
    KING = "king"

    @property
    def offsets(self) -> tuple:
        if self is GridKind.SQUARE:
            return _SQUARE
        if self is GridKind.TRIANGULAR:
            return _SQUARE + ((1, 1), (-1, -1))
        return _SQUARE + ((1, 1), (-1, -1), (1, -1), (-1, 1))

    @classmethod
    def parse(cls, name: str) -> "GridKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown grid {name!r}; expected square, triangular or king") from None


def neighborhood(kind: GridKind, r: int) -> Shape:
    """Relative r-neighborhood: all offsets within graph distance ``r`` of the origin."""
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    kind = GridKind(kind)
    dist = {(0, 0): 0}
    queue = deque([(0, 0)])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if d == r:
            continue
        for dx, dy in kind.offsets:
            w = (u[0] + dx, u[1] + dy)
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return Shape(dist)


def block(w: int, h: int) -> Shape:
    """The ``w x h`` rectangle with lower-left corner at the origin."""
    return Shape((i, j) for i in range(w) for j in range(h))
