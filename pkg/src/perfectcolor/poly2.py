"""Sparse bivariate Laurent polynomials with integer coefficients.

A polynomial is stored as a mapping ``(i, j) -> coefficient`` meaning
``coefficient * x**i * y**j``.  Exponents may be negative.  Zero coefficients
are never stored, so the zero polynomial is the empty mapping.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Tuple

Exponent = Tuple[int, int]


class Shape(frozenset):
    """A finite set of lattice offsets ``(i, j)``."""

    def __new__(cls, points: Iterable[Iterable[int]] = ()):
        pts = []
        for p in points:
            i, j = p
            if not (isinstance(i, int) and isinstance(j, int)):
                raise TypeError(f"offsets must be integer pairs, got {p!r}")
            pts.append((int(i), int(j)))
        return super().__new__(cls, pts)

    def sorted(self) -> list:
        return sorted(self)

    def negate(self) -> "Shape":
        return Shape((-i, -j) for i, j in self)

    def translate(self, di: int, dj: int) -> "Shape":
        return Shape((i + di, j + dj) for i, j in self)

    def __repr__(self):
        return f"Shape({sorted(self)!r})"


class LaurentPoly2:
    """Immutable sparse Laurent polynomial in ``x`` and ``y`` over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            i, j = exp
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._hash = None

    # constructors

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "LaurentPoly2":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "LaurentPoly2":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "LaurentPoly2":
        return cls.monomial(0, 1)

    # container protocol

    @property
    def terms(self) -> dict:
        """Copy of the term mapping in canonical ``(i, j)`` order."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple]:
        return iter(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def support(self) -> frozenset:
        return frozenset(self._terms)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly2(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly2(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial is not a Laurent polynomial")
            (i, j), c = next(iter(self._terms.items()))
            if c not in (1, -1):
                raise ValueError("negative power of a monomial needs a unit coefficient")
            return LaurentPoly2({(i * k, j * k): c ** (-k)})
        result = LaurentPoly2.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, di: int, dj: int) -> "LaurentPoly2":
        """Multiply by the monomial ``x**di * y**dj``."""
        return LaurentPoly2({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly2({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def add(f: LaurentPoly2, g: LaurentPoly2) -> LaurentPoly2:
    return f + g


def mul(f: LaurentPoly2, g: LaurentPoly2) -> LaurentPoly2:
    return f * g


def support(f: LaurentPoly2) -> frozenset:
    return f.support()


def characteristic_poly(shape: Iterable[Exponent]) -> LaurentPoly2:
    """Return ``sum(X**-u for u in shape)``.

    Multiplying a configuration by this polynomial replaces each cell by the
    sum of the values in its neighborhood ``u + shape``.
    """
    pts = set(Shape(shape))
    if not pts:
        raise ValueError("empty shape")
    return LaurentPoly2({(-i, -j): 1 for i, j in pts})


def dilation(f: LaurentPoly2, k: int) -> LaurentPoly2:
    """Substitute ``x -> x**k, y -> y**k``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"dilation factor must be a positive integer, got {k!r}")
    return LaurentPoly2({(k * i, k * j): c for (i, j), c in f.items()})
