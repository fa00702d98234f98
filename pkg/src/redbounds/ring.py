"""Local rings presented as (k[x_1..x_n]/a) localized at m = (x_1..x_n).

All computation happens in the affine quotient k[x]/a.  This is valid for
everything the package does because every analyzed ideal has radical m,
so the relevant quotients are already Artinian local and lengths, colons
and equalities agree with the localization.  No local (Mora) orderings
are used.
"""

import random
from fractions import Fraction
from math import gcd, lcm

from .groebner import buchberger
from .poly import PolyRing


def find_positive_grading(polys, nvars, tries=120):
    """A strictly positive integer weight vector making every polynomial in
    `polys` homogeneous, or None if the search fails.

    The homogeneity conditions are linear: for each polynomial, all its
    exponent vectors must have equal weighted degree.  The constraint
    matrix is row-reduced exactly and free variables are assigned small
    positive values (all ones first, then seeded pseudorandom draws) until
    every component of the solution comes out positive.  Failure to find a
    vector is conservative — callers fall back to a slower path that does
    not need one."""
    rows = []
    for p in polys:
        exps = list(p.terms)
        base = exps[0]
        for other in exps[1:]:
            row = [a - b for a, b in zip(other, base)]
            if any(row):
                rows.append(row)
    if not rows:
        return (1,) * nvars
    if all(sum(r) == 0 for r in rows):
        return (1,) * nvars
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(nvars):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(nvars) if c not in pivots]
    if not free:
        return None
    rng = random.Random(1)
    for attempt in range(tries):
        if attempt == 0:
            assign = [Fraction(1)] * len(free)
        else:
            assign = [Fraction(rng.randint(1, 9)) for _ in free]
        w = [None] * nvars
        for c, v in zip(free, assign):
            w[c] = v
        for i, c in enumerate(pivots):
            w[c] = -sum(mat[i][j] * w[j] for j in free)
        if all(x > 0 for x in w):
            den = 1
            for x in w:
                den = lcm(den, x.denominator)
            ws = [int(x * den) for x in w]
            g = 0
            for x in ws:
                g = gcd(g, x)
            return tuple(x // g for x in ws)
    return None


class RingPresentation:
    """R = (k[x_1..x_n]/a)_m with m the image of (x_1, ..., x_n).

    `relations` generate a; every relation must lie in m (zero constant
    term) so that m really is a maximal ideal containing a.  The Krull
    dimension is filled in lazily by the Hilbert analysis and may be
    cross-checked against a user-declared value.
    """

    def __init__(self, ambient: PolyRing, relations=(), declared_dimension=None):
        relations = [r for r in relations if not r.is_zero()]
        for r in relations:
            if r.ring != ambient:
                raise ValueError("relation outside the ambient ring")
            if r.constant_term() != 0:
                raise ValueError(
                    "relation %s has a nonzero constant term; it must lie in m" % r
                )
        self.ambient = ambient
        self.relations = tuple(relations)
        self.declared_dimension = declared_dimension
        self._relations_gb = None
        self._dimension = None
        self._maximal_ideal = None

    # -- identity -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RingPresentation)
            and self.ambient == other.ambient
            and set(self.relations) == set(other.relations)
        )

    def __hash__(self):
        return hash((self.ambient, frozenset(self.relations)))

    def __repr__(self):
        if not self.relations:
            return "RingPresentation(%r)" % (self.ambient,)
        return "RingPresentation(%r mod %d relations)" % (
            self.ambient,
            len(self.relations),
        )

    # -- structure ----------------------------------------------------

    @property
    def is_polynomial_ring(self):
        return not self.relations

    def relations_groebner_basis(self):
        if self._relations_gb is None:
            self._relations_gb = buchberger(list(self.relations)) if self.relations else []
        return self._relations_gb

    @property
    def dimension(self):
        """Krull dimension, once computed by hilbert.krull_dimension."""
        return self._dimension

    def set_dimension(self, d):
        if self.declared_dimension is not None and self.declared_dimension != d:
            raise ValueError(
                "computed dimension %d contradicts declared dimension %d"
                % (d, self.declared_dimension)
            )
        self._dimension = d

    def maximal_ideal(self):
        from .ideal import Ideal

        if self._maximal_ideal is None:
            self._maximal_ideal = Ideal(self, self.ambient.gens())
        return self._maximal_ideal

    def quotient_by_element(self, x):
        """The presentation of R/(x); ideals map forward by reusing their
        preimage generators.  Quotient by zero is the ring itself."""
        if x.is_zero():
            return self
        if x.ring != self.ambient:
            raise ValueError("element outside the ambient ring")
        if x.constant_term() != 0:
            raise ValueError("element %s is a unit in the local ring" % x)
        return RingPresentation(self.ambient, self.relations + (x,))
