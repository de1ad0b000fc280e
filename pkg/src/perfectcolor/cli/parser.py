"""Recursive-descent parser for Laurent polynomial expressions in x and y.

Grammar (highest precedence last)::

    expr     := term (('+' | '-') term)*
    term     := unary (['*'] unary)*        juxtaposition multiplies: 3x, 2(x+y)
    unary    := '-' unary | '+' unary | power
    power    := atom ['^' exponent]
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom     := INT | 'x' | 'y' | '(' expr ')'

So ``-x^2`` is ``-(x^2)`` and ``x^-1`` is ``1/x``.  Only monomials may be
raised to a power, since anything else leaves the Laurent ring for negative
exponents.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from ..poly2 import LaurentPoly2


class PolySyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"column {column}: {message}")


class Token(NamedTuple):
    kind: str  # INT, VAR, OP, END
    text: str
    column: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|([-+*^()])|(\S))")


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace is left
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(Token("INT", m.group(1), col))
        elif m.group(2):
            tokens.append(Token("VAR", m.group(2), col))
        elif m.group(3):
            tokens.append(Token("OP", m.group(3), col))
        else:
            raise PolySyntaxError(f"unexpected character {m.group(4)!r}", col)
        pos = m.end()
    tokens.append(Token("END", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        if self.tok.kind == "OP" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> Token:
        if not (self.tok.kind == "OP" and self.tok.text == op):
            raise PolySyntaxError(f"expected {op!r}, found {self._describe()}", self.tok.column)
        return self.take()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "END" else repr(self.tok.text)

    def parse(self) -> LaurentPoly2:
        if self.tok.kind == "END":
            raise PolySyntaxError("empty expression", self.tok.column)
        value = self.expr()
        if self.tok.kind != "END":
            raise PolySyntaxError(f"unexpected {self._describe()}", self.tok.column)
        return value

    def expr(self) -> LaurentPoly2:
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def _starts_factor(self) -> bool:
        t = self.tok
        return t.kind in ("INT", "VAR") or (t.kind == "OP" and t.text == "(")

    def term(self) -> LaurentPoly2:
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self._starts_factor():
                value = value * self.unary()
            else:
                return value

    def unary(self) -> LaurentPoly2:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> LaurentPoly2:
        start = self.tok.column
        base = self.atom()
        if not self.accept("^"):
            return base
        k = self.exponent()
        if not base.is_monomial():
            raise PolySyntaxError("exponent applied to non-monomial", start)
        try:
            return base ** k
        except ValueError as exc:
            raise PolySyntaxError(str(exc), start) from None

    def exponent(self) -> int:
        if self.accept("("):
            k = self._signed_int()
            self.expect(")")
            return k
        return self._signed_int()

    def _signed_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        t = self.tok
        if t.kind != "INT":
            raise PolySyntaxError(f"exponent must be an integer, found {self._describe()}", t.column)
        self.take()
        return sign * int(t.text)

    def atom(self) -> LaurentPoly2:
        t = self.tok
        if t.kind == "INT":
            self.take()
            return LaurentPoly2.constant(int(t.text))
        if t.kind == "VAR":
            self.take()
            return LaurentPoly2.x() if t.text == "x" else LaurentPoly2.y()
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        raise PolySyntaxError(f"unexpected {self._describe()}", t.column)


def parse_poly(text: str) -> LaurentPoly2:
    """Parse ``text`` into a :class:`LaurentPoly2`."""
    return _Parser(text).parse()
