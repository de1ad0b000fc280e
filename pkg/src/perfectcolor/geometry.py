"""Exact lattice geometry: convex hulls, outer edges and convexity of shapes.

Everything runs on integer cross products; no floating point is involved.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple


class Direction(NamedTuple):
    p: int
    q: int

    def __neg__(self):
        return Direction(-self.p, -self.q)


def primitive(p: int, q: int) -> Direction:
    """Divide a nonzero vector by the gcd of its components (sign kept)."""
    if p == 0 and q == 0:
        raise ValueError("the zero vector has no direction")
    g = gcd(p, q)
    return Direction(p // g, q // g)


def normalize(v) -> Direction:
    """Axis representative of ``v``: primitive with ``p > 0``, or ``p == 0 and q > 0``."""
    d = primitive(*v)
    if d.p < 0 or (d.p == 0 and d.q < 0):
        d = -d
    return d


def is_primitive(v) -> bool:
    p, q = v
    return (p, q) != (0, 0) and gcd(p, q) == 1


def cross(o, a, b) -> int:
    """Z-component of ``(a - o) x (b - o)``; positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _points(S: Iterable) -> list:
    pts = sorted({(int(p[0]), int(p[1])) for p in S})
    if not pts:
        raise ValueError("convex hull of an empty set")
    return pts


def convex_hull(S: Iterable) -> list:
    """Hull vertices in counterclockwise order, collinear points dropped.

    The cycle starts at the rightmost vertex (lowest among ties).  A collinear
    input gives its two extreme points in lexicographic order and a single
    point gives itself.
    """
    pts = _points(S)
    if len(pts) == 1:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return sorted(hull)
    start = min(range(len(hull)), key=lambda k: (-hull[k][0], hull[k][1]))
    return hull[start:] + hull[:start]


def outer_edge_directions(S: Iterable) -> set:
    """Signed primitive directions of the outer edges of ``S``.

    ``S`` has an outer edge in direction ``v`` when a line parallel to ``v``
    meets ``S`` in at least two points and all of ``S`` lies on its right
    when walking along ``v``.  Hull edges walked clockwise give exactly these.
    """
    hull = convex_hull(S)
    if len(hull) == 1:
        return set()
    if len(hull) == 2:
        (a, b) = hull
        v = primitive(b[0] - a[0], b[1] - a[1])
        return {v, -v}
    dirs = set()
    n = len(hull)
    for k in range(n):
        a, b = hull[k], hull[(k + 1) % n]
        dirs.add(primitive(a[0] - b[0], a[1] - b[1]))
    return dirs


def edge_pair_directions(S: Iterable) -> set:
    """Normalized directions ``v`` where ``S`` has outer edges in both ``v`` and ``-v``."""
    edges = outer_edge_directions(S)
    return {normalize(v) for v in edges if -v in edges}


def supporting_line_points(S: Iterable, v) -> list:
    """Points of ``S`` on the supporting line with ``S`` to the right of ``v``."""
    pts = _points(S)
    p, q = v
    # <u, v_perp> with v_perp = (q, -p); S lies where this is >= its minimum
    key = [u[0] * q - u[1] * p for u in pts]
    lo = min(key)
    return [u for u, k in zip(pts, key) if k == lo]


def in_hull(hull: list, u) -> bool:
    """Is ``u`` inside or on the boundary of the hull returned by :func:`convex_hull`?"""
    if len(hull) == 1:
        return tuple(u) == tuple(hull[0])
    if len(hull) == 2:
        a, b = hull
        if cross(a, b, u) != 0:
            return False
        return min(a[0], b[0]) <= u[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= u[1] <= max(a[1], b[1])
    n = len(hull)
    return all(cross(hull[k], hull[(k + 1) % n], u) >= 0 for k in range(n))


def is_convex(D: Iterable) -> bool:
    """True iff ``D`` contains every lattice point of its real convex hull."""
    pts = set(_points(D))
    hull = convex_hull(pts)
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    for i in range(min(xs), max(xs) + 1):
        for j in range(min(ys), max(ys) + 1):
            if (i, j) not in pts and in_hull(hull, (i, j)):
                return False
    return True
