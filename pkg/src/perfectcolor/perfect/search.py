"""Bounded search for perfect colorings and coverings on a torus.

Cells are assigned in row-major order (``y`` then ``x``, matching
``TorusConfig.colors``) and colors are tried in increasing order, so results
come out in lexicographic order of the color sequence.  A cell's constraint
is checked as soon as the cell and its whole wrapped neighborhood are
assigned.

The search never decides emptiness of the infinite problem: finding nothing
only means there is nothing with periods ``(w, 0)`` and ``(0, h)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from .torus import TorusConfig, check_torus


@dataclass(frozen=True)
class Covering:
    b: int
    a: int


@dataclass(frozen=True)
class MatrixConstraint:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))


@dataclass(frozen=True)
class AnyPerfect:
    pass


Constraint = Union[Covering, MatrixConstraint, AnyPerfect]


def _targets(constraint, n: int, size: int):
    """Required count vector per cell color, or ``None`` for AnyPerfect."""
    if isinstance(constraint, Covering):
        if n != 2:
            raise ValueError("covering search needs exactly 2 colors")
        b, a = constraint.b, constraint.a
        return [(size - a, a), (size - b, b)]
    if isinstance(constraint, MatrixConstraint):
        rows = constraint.entries
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be {n}x{n} for {n} colors")
        cols = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
        if any(sum(col) != size for col in cols):
            raise ValueError("matrix inconsistent with |D|")
        return cols
    if isinstance(constraint, AnyPerfect):
        return None
    raise TypeError(f"unknown constraint {constraint!r}")


class _Problem:
    def __init__(self, D, n: int, w: int, h: int, constraint):
        self.n, self.w, self.h = n, w, h
        self.size = w * h
        offs = sorted(D)
        self.targets = _targets(constraint, n, len(offs))
        self.nbrs = [
            [((y + dy) % h) * w + (x + dx) % w for dx, dy in offs]
            for y in range(h)
            for x in range(w)
        ]
        # cells whose check becomes possible once index k is assigned
        self.ready = [[] for _ in range(self.size)]
        for cell in range(self.size):
            last = max([cell] + self.nbrs[cell])
            self.ready[last].append(cell)

    def solve(self, prefix=(), limit: Optional[int] = None) -> list:
        n, size = self.n, self.size
        colors = [-1] * size
        profile: list = [None] * n
        out: list = []

        def counts(cell):
            vec = [0] * n
            for k in self.nbrs[cell]:
                vec[colors[k]] += 1
            return tuple(vec)

        def assign(k):
            """Check cells completed at k; returns colors whose profile was set here or None on failure."""
            fresh = []
            for cell in self.ready[k]:
                vec = counts(cell)
                col = colors[cell]
                if self.targets is not None:
                    if vec != self.targets[col]:
                        break
                else:
                    if profile[col] is None:
                        profile[col] = vec
                        fresh.append(col)
                    elif profile[col] != vec:
                        break
            else:
                return fresh
            for col in fresh:
                profile[col] = None
            return None

        def rec(k):
            if limit is not None and len(out) >= limit:
                return
            if k == size:
                out.append(tuple(colors))
                return
            fixed = prefix[k] if k < len(prefix) else None
            for col in (range(n) if fixed is None else (fixed,)):
                colors[k] = col
                fresh = assign(k)
                if fresh is not None:
                    rec(k + 1)
                    for c in fresh:
                        profile[c] = None
                colors[k] = -1

        rec(0)
        return out


def _solve_prefix(args):
    D, n, w, h, constraint, prefix, limit = args
    return _Problem(D, n, w, h, constraint).solve(prefix, limit)


def search(
    D,
    n: int,
    w: int,
    h: int,
    constraint: Constraint,
    limit: Optional[int] = None,
    threads: int = 1,
    allow_wrap: bool = False,
) -> list:
    """All ``w x h`` torus configurations meeting ``constraint``, in lexicographic order.

    With ``threads > 1`` the first few cells are enumerated up front and each
    prefix is solved in a worker process; merging in prefix order reproduces
    the serial output exactly, including truncation at ``limit``.

    ``allow_wrap`` lifts the requirement that ``D`` fit on the torus; counts
    are then taken over the periodic extension, with repeated cells counted
    once per offset that reaches them.
    """
    if n < 1:
        raise ValueError("alphabet size must be positive")
    D = sorted(set(D))
    if not allow_wrap:
        check_torus(D, w, h)
    problem = _Problem(D, n, w, h, constraint)
    if threads <= 1:
        found = problem.solve((), limit)
    else:
        depth = 0
        while n ** depth < 4 * threads and depth < w * h:
            depth += 1
        prefixes = list(itertools.product(range(n), repeat=depth))
        jobs = [(D, n, w, h, constraint, p, limit) for p in prefixes]
        found = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_solve_prefix, jobs):
                found.extend(part)
                if limit is not None and len(found) >= limit:
                    break
        if limit is not None:
            found = found[:limit]
    return [TorusConfig(w, h, cs, n) for cs in found]
