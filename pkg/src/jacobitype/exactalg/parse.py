"""Text form of bivariate polynomials.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := ('-')? factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'u' | 's' | '(' expr ')'
    rational := int ('/' uint)?

:func:`format_poly` prints graded-lex descending with explicit ``*`` and
``p/q`` rationals, and :func:`parse_poly_expr` reads that output back.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import PolySyntaxError
from .bipoly import BiPoly


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, msg: str):
        # byte offset into the utf-8 encoding of the input
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise PolySyntaxError(msg, self.text, offset)

    def _uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def parse(self) -> BiPoly:
        value = self.expr()
        if self._peek():
            self._fail(f"unexpected character {self._peek()!r}")
        return value

    def expr(self) -> BiPoly:
        value = self.term()
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> BiPoly:
        negate = False
        if self._peek() == "-":
            self.pos += 1
            negate = True
        value = self.factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return -value if negate else value

    def factor(self) -> BiPoly:
        base = self.base()
        if self._peek() == "^":
            self.pos += 1
            return base ** self._uint()
        return base

    def base(self) -> BiPoly:
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return value
        if ch in ("u", "s"):
            self.pos += 1
            return BiPoly.var(ch)
        if ch.isdigit():
            num = self._uint()
            if self._peek() == "/":
                self.pos += 1
                den = self._uint()
                if den == 0:
                    self.pos -= 1
                    self._fail("zero denominator in rational literal")
                return BiPoly.const(Fraction(num, den))
            return BiPoly.const(num)
        if not ch:
            self._fail("unexpected end of input")
        self._fail(f"unexpected character {ch!r}")


def parse_poly_expr(text: str) -> BiPoly:
    """Parse a polynomial in u and s, returning its expanded form."""
    return _Parser(text).parse()


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("u" if i == 1 else f"u^{i}")
    if j:
        parts.append("s" if j == 1 else f"s^{j}")
    return "*".join(parts)


def format_poly(p: BiPoly) -> str:
    """Canonical printer; inverse of :func:`parse_poly_expr`."""
    if p.is_zero():
        return "0"
    out = []
    for k, ((i, j), c) in enumerate(p.sorted_terms()):
        mono = _monomial(i, j)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)
