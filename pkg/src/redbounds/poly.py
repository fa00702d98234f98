"""Multivariate polynomials with exact coefficients.

A polynomial is stored as a dict mapping exponent tuples to nonzero field
elements.  Values are immutable by convention: no public method mutates a
polynomial after construction, so they are safe to share and to use as
cache keys.
"""

import re

from .errors import RingMismatchError
from .field import QQ
from .orders import GREVLEX, monomial_mul

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

try:
    from gmpy2 import gcd as _int_gcd, lcm as _int_lcm
except ImportError:  # pragma: no cover
    from math import gcd as _int_gcd, lcm as _int_lcm


class PolyRing:
    """A polynomial ring k[x_1..x_n] with a default monomial order."""

    def __init__(self, field, variables, order=GREVLEX):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        for name in variables:
            if not _IDENT_RE.match(name):
                raise ValueError("bad variable name %r" % name)
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = order

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return "%r[%s]/%r" % (self.field, ",".join(self.variables), self.order)

    # -- constructors -------------------------------------------------

    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return Polynomial(self, {(0,) * self.nvars: self.field.one})

    def constant(self, a, b=1):
        c = self.field(a, b)
        if c == 0:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exponents, coeff=None):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars or any(x < 0 for x in exponents):
            raise ValueError("bad exponent vector %r" % (exponents,))
        if coeff is None:
            coeff = self.field.one
        if coeff == 0:
            return self.zero
        return Polynomial(self, {exponents: coeff})

    def from_dict(self, terms):
        return Polynomial(self, {e: c for e, c in terms.items() if c != 0})

    def parse(self, text):
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def with_order(self, order):
        if order == self.order:
            return self
        return PolyRing(self.field, self.variables, order)

    def extend(self, extra_names, order=None):
        """A ring with `extra_names` prepended (used for elimination)."""
        return PolyRing(
            self.field, tuple(extra_names) + self.variables, order or self.order
        )


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def is_homogeneous(self, weights=None):
        if weights is None:
            degs = {sum(e) for e in self.terms}
        else:
            degs = {sum(w * k for w, k in zip(weights, e)) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- leading data -------------------------------------------------

    def leading_monomial(self, order=None):
        order = order or self.ring.order
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=None):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order=None):
        """Terms as (exponent, coeff) pairs in decreasing order."""
        order = order or self.ring.order
        return [(e, self.terms[e]) for e in sorted(self.terms, key=order.key, reverse=True)]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                "operands in different rings: %r vs %r" % (self.ring, other.ring)
            )

    def __add__(self, other):
        self._check(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            s = d.get(e, 0) + c
            if s == 0:
                d.pop(e, None)
            else:
                d[e] = s
        return Polynomial(self.ring, d)

    def __sub__(self, other):
        self._check(other)
        d = dict(self.terms)
        for e, c in other.terms.items():
            s = d.get(e, 0) - c
            if s == 0:
                d.pop(e, None)
            else:
                d[e] = s
        return Polynomial(self.ring, d)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = monomial_mul(ea, eb)
                s = d.get(e, 0) + ca * cb
                if s == 0:
                    d.pop(e, None)
                else:
                    d[e] = s
        return Polynomial(self.ring, d)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def scale(self, c):
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def mul_term(self, exponent, coeff):
        if coeff == 0:
            return self.ring.zero
        return Polynomial(
            self.ring,
            {monomial_mul(e, exponent): c * coeff for e, c in self.terms.items()},
        )

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- normalization ------------------------------------------------

    def monic(self, order=None):
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return Polynomial(self.ring, {e: c / lc for e, c in self.terms.items()})

    def primitive(self, order=None):
        """Remove rational content: integer coefficients, gcd 1, positive
        leading coefficient.  Over F_p this just makes the polynomial monic."""
        if not self.terms:
            return self
        if self.ring.field != QQ:
            return self.monic(order)
        den = 1
        for c in self.terms.values():
            den = _int_lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = _int_gcd(num, c.numerator * (den // c.denominator))
        lc = self.leading_coefficient(order)
        scalar = QQ(den, num) if lc > 0 else QQ(-den, num)
        return self.scale(scalar)

    def exact_div(self, divisor, order=None):
        """Exact polynomial division; raises ValueError on a remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        order = order or self.ring.order
        from .orders import monomial_div

        lm = divisor.leading_monomial(order)
        lc = divisor.terms[lm]
        rem = dict(self.terms)
        out = {}
        while rem:
            e = max(rem, key=order.key)
            q = monomial_div(e, lm)
            if q is None:
                raise ValueError("inexact polynomial division")
            c = rem[e] / lc
            out[q] = c
            for ed, cd in divisor.terms.items():
                et = monomial_mul(ed, q)
                s = rem.get(et, 0) - c * cd
                if s == 0:
                    rem.pop(et, None)
                else:
                    rem[et] = s
        return Polynomial(self.ring, out)

    # -- printing -----------------------------------------------------

    def _coeff_str(self, c):
        return str(c)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, exp in zip(self.ring.variables, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append("%s^%d" % (name, exp))
            cs = self._coeff_str(c)
            negative = cs.startswith("-")
            if negative:
                cs = cs[1:]
            if factors:
                body = "*".join(factors) if cs == "1" else cs + "*" + "*".join(factors)
            else:
                body = cs
            if not parts:
                parts.append("-" + body if negative else body)
            else:
                parts.append((" - " if negative else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Polynomial(%s)" % self
