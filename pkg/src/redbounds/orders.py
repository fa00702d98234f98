"""Monomial orders on exponent tuples.

Monomials are plain tuples of non-negative ints (one entry per ring
variable).  An order provides `key(e)`: monomial a > monomial b iff
key(a) > key(b) as Python tuples.  `heapkey(e)` is the negated key, so a
min-heap pops the largest monomial first.  All orders here are total,
multiplicative and have 1 as the minimum.
"""


def degree(e):
    return sum(e)


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _grevlex_heapkey(e):
    return (-sum(e), tuple(reversed(e)))


class GrevlexOrder:
    """Graded reverse lexicographic order in the declared variable sequence."""

    kind = "grevlex"

    def key(self, e):
        return _grevlex_key(e)

    def heapkey(self, e):
        return _grevlex_heapkey(e)

    def __eq__(self, other):
        return isinstance(other, GrevlexOrder)

    def __hash__(self):
        return hash("grevlex")

    def __repr__(self):
        return "grevlex"


class LexOrder:
    kind = "lex"

    def key(self, e):
        return tuple(e)

    def heapkey(self, e):
        return tuple(-x for x in e)

    def __eq__(self, other):
        return isinstance(other, LexOrder)

    def __hash__(self):
        return hash("lex")

    def __repr__(self):
        return "lex"


class EliminationOrder:
    """Block order eliminating the first `nelim` variables.

    Compares the leading block by grevlex, then the tail block by grevlex,
    so any monomial involving an eliminated variable beats any monomial
    that avoids them all.
    """

    def __init__(self, nelim):
        if nelim < 1:
            raise ValueError("need at least one eliminated variable")
        self.nelim = nelim
        self.kind = "elim(%d)" % nelim

    def key(self, e):
        k = self.nelim
        return (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

    def heapkey(self, e):
        k = self.nelim
        return (_grevlex_heapkey(e[:k]), _grevlex_heapkey(e[k:]))

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and self.nelim == other.nelim

    def __hash__(self):
        return hash(("elim", self.nelim))

    def __repr__(self):
        return self.kind


GREVLEX = GrevlexOrder()
LEX = LexOrder()


def make_order(kind, nelim=None):
    if kind == "grevlex":
        return GREVLEX
    if kind == "lex":
        return LEX
    if kind == "elim":
        return EliminationOrder(nelim)
    raise ValueError("unknown monomial order %r" % kind)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, or None if b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_divides(b, a):
    return all(x <= y for x, y in zip(b, a))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))
