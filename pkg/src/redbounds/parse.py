"""Recursive-descent parser for polynomial text.

Grammar (whitespace insensitive):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := primary ['^' UINT]
    primary := NUMBER | IDENT | '(' expr ')' | '-' primary
    NUMBER  := UINT ['/' UINT]

Multiplication is always explicit (`2*x`, never `2x`); `^` takes a
non-negative integer exponent.  `parse(str(f)) == f` for every
polynomial f printed by this package.
"""

import re

from .errors import ParseError

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0], pos)
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.group("ident"):
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.varindex = {name: k for k, name in enumerate(ring.variables)}

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)
        self.advance()

    def parse(self):
        poly = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input %r" % value, pos)
        return poly

    def expr(self):
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.advance()
            negate = value == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def term(self):
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self):
        poly = self.primary()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind == "op" and value == "-":
                raise ParseError("negative exponent", pos)
            if kind != "number" or "/" in value:
                raise ParseError("exponent must be a non-negative integer", pos)
            self.advance()
            poly = poly ** int(value)
        return poly

    def primary(self):
        kind, value, pos = self.advance()
        if kind == "number":
            if "/" in value:
                num, den = value.split("/")
                if int(den) == 0:
                    raise ParseError("zero denominator", pos)
                return self.ring.constant(int(num), int(den))
            return self.ring.constant(int(value))
        if kind == "ident":
            idx = self.varindex.get(value)
            if idx is None:
                raise ParseError("unknown variable %r" % value, pos)
            return self.ring.gen(idx)
        if kind == "op" and value == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        if kind == "op" and value == "-":
            return -self.primary()
        raise ParseError("expected a number, variable or '('", pos)


def parse_polynomial(text, ring):
    """Parse `text` into a canonical Polynomial over `ring`."""
    return _Parser(text, ring).parse()
