"""Ideals of a presented local ring, with the operation set the rest of
the package is built on: sum, product, power (cached), colon, equality,
membership, m-primariness, colength, order o(I), and passage to R/(x).

An Ideal stores *preimage* generators in the ambient polynomial ring; the
ideal it denotes is (generators) + (relations).  Values are immutable;
caches (Groebner basis, colength, powers, monomial normal forms) are
filled on demand and reused by every downstream analysis.
"""

from . import monomial_ideal as mono
from .errors import CapExceededError, NotMPrimaryError, RingMismatchError
from .groebner import _ReducerSet, buchberger, normal_form
from .linalg import SparseRREF, nullspace
from .orders import EliminationOrder, monomial_div, monomial_mul
from .poly import Polynomial
from .ring import RingPresentation, find_positive_grading

DEFAULT_POWER_CAP = 40


def _poly_key(p):
    order = p.ring.order
    return tuple((order.key(e), str(c)) for e, c in p.sorted_terms())


class Ideal:
    def __init__(self, ring: RingPresentation, gens):
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if g.ring != ring.ambient:
                raise RingMismatchError("generator outside the ambient ring")
        self.ring = ring
        self.gens = tuple(sorted(set(gens), key=_poly_key))
        self._gb = None
        self._length = None
        self._graded = None
        self._order_in_m = None
        self._std_monomials = None
        self._powers = {1: self}
        self._nf_cache = {}
        self._nf_reducers = None

    # -- basics -------------------------------------------------------

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.gens[:6]) + (
            ", ..." if len(self.gens) > 6 else ""
        )

    def _check(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")

    @property
    def gens_are_monomial(self):
        return all(g.is_monomial() for g in self.gens)

    @property
    def is_monomial_ideal(self):
        """Monomial generators in a plain polynomial ring: combinatorial
        fast paths apply."""
        return self.ring.is_polynomial_ring and self.gens_are_monomial

    def monomial_exponents(self):
        return mono.minimalize([g.leading_monomial() for g in self.gens])

    def is_zero(self):
        if not self.gens:
            return True
        rel_gb = self.ring.relations_groebner_basis()
        if not rel_gb:
            return False
        return all(normal_form(g, rel_gb).is_zero() for g in self.gens)

    # -- Groebner basis and membership --------------------------------

    def groebner_basis(self):
        """Reduced Groebner basis (ambient default order) of the preimage
        generators + relations; canonical, hence usable for equality."""
        if self._gb is None:
            if self.is_monomial_ideal:
                ring = self.ring.ambient
                self._gb = [ring.monomial(e) for e in self.monomial_exponents()]
            else:
                self._gb = buchberger(list(self.gens) + list(self.ring.relations))
        return self._gb

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.groebner_basis()]

    def is_unit(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_proper(self):
        return not self.is_unit()

    def _reducers(self):
        if self._nf_reducers is None:
            rs = _ReducerSet(self.ring.ambient.order)
            for g in self.groebner_basis():
                rs.add(g)
            self._nf_reducers = rs
        return self._nf_reducers

    def _nf_monomial(self, e):
        """Normal form of a single monomial, memoized across calls.  The
        basis is a Groebner basis, so the result is strategy-independent."""
        cache = self._nf_cache
        hit = cache.get(e)
        if hit is not None:
            return hit
        ring = self.ring.ambient
        reducers = self._reducers()
        stack = [e]
        while stack:
            m = stack[-1]
            if m in cache:
                stack.pop()
                continue
            found = reducers.find(m)
            if found is None:
                cache[m] = ring.monomial(m)
                stack.pop()
                continue
            _, lm, lc, terms = found
            q = monomial_div(m, lm)
            needed = []
            for ed in terms:
                if ed == lm:
                    continue
                et = monomial_mul(ed, q)
                if et not in cache:
                    needed.append(et)
            if needed:
                stack.extend(needed)
                continue
            acc = {}
            for ed, cd in terms.items():
                if ed == lm:
                    continue
                factor = -(cd / lc)
                for e2, c2 in cache[monomial_mul(ed, q)].terms.items():
                    s = acc.get(e2, 0) + factor * c2
                    if s == 0:
                        acc.pop(e2, None)
                    else:
                        acc[e2] = s
            cache[m] = Polynomial(ring, acc)
            stack.pop()
        return cache[e]

    def reduce(self, f):
        """Normal form of f modulo this ideal (its reduced GB)."""
        if f.ring != self.ring.ambient:
            raise RingMismatchError("element outside the ambient ring")
        acc = {}
        for e, c in f.terms.items():
            for e2, c2 in self._nf_monomial(e).terms.items():
                s = acc.get(e2, 0) + c * c2
                if s == 0:
                    acc.pop(e2, None)
                else:
                    acc[e2] = s
        return Polynomial(self.ring.ambient, acc)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def contains_ideal(self, other):
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def equal(self, other):
        """Equality as *affine* ideals, via canonical reduced Groebner
        bases (with a staircase shortcut for monomial ideals).  For the
        local ring this is sufficient but not necessary; nested m-primary
        ideals are locally equal iff their colengths agree."""
        self._check(other)
        if self is other:
            return True
        if self.is_monomial_ideal and other.is_monomial_ideal:
            return self.monomial_exponents() == other.monomial_exponents()
        return self.groebner_basis() == other.groebner_basis()

    def locally_contains_ideal(self, other):
        """Containment after localizing at m.  Affine containment is
        checked first (it implies local containment); otherwise B lies in
        A locally iff A and A+B have the same local colength."""
        self._check(other)
        if self.contains_ideal(other):
            return True
        return (self + other).length() == self.length()

    # -- constructive operations --------------------------------------

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, list(self.gens) + list(other.gens))

    def __mul__(self, other):
        self._check(other)
        if not self.gens or not other.gens:
            return Ideal(self.ring, [])
        if self.gens_are_monomial and other.gens_are_monomial:
            exps = mono.product(
                [g.leading_monomial() for g in self.gens],
                [g.leading_monomial() for g in other.gens],
            )
            ring = self.ring.ambient
            return Ideal(self.ring, [ring.monomial(e) for e in exps])
        products = {a * b for a in self.gens for b in other.gens}
        gens = _trim_homogeneous(sorted(products, key=_poly_key), self.ring)
        return Ideal(self.ring, gens)

    def power(self, n, cap=DEFAULT_POWER_CAP):
        """I^n with caching; I^0 is the unit ideal.  Hitting the cap is a
        structured failure, never silent truncation."""
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            return Ideal(self.ring, [self.ring.ambient.one])
        if n > cap:
            raise CapExceededError("ideal power %d" % n, cap)
        powers = self._powers
        if n in powers:
            return powers[n]
        k = max(i for i in powers if i <= n)
        result = powers[k]
        while k < n:
            result = result * self
            k += 1
            powers[k] = result
        return result

    def colon(self, other):
        """(self : other) = {f : f*other inside self}.

        Dispatch: staircase arithmetic for monomial ideals; exact linear
        algebra on the finite quotient when self is m-primary; otherwise
        the auxiliary-variable elimination route.  All three agree (the
        test suite cross-checks them)."""
        self._check(other)
        bgens = [g for g in other.gens if not g.is_zero()]
        if not bgens or other.is_zero():
            raise ValueError("colon by the zero ideal")
        if self.is_monomial_ideal and other.is_monomial_ideal:
            exps = mono.colon(self.monomial_exponents(), other.monomial_exponents())
            ring = self.ring.ambient
            return Ideal(self.ring, [ring.monomial(e) for e in exps])
        if self.is_m_primary(strict=False):
            return _colon_linear_algebra(self, bgens)
        return _colon_elimination_multi(self, bgens)

    # -- numerical invariants -----------------------------------------

    def is_m_primary(self, strict=True):
        """True iff the quotient by this ideal has finite length: every
        ambient variable has a pure power among the leading monomials."""
        if strict and self.is_unit():
            raise ValueError("is_m_primary: the unit ideal is not a proper ideal")
        lts = [g.leading_monomial() for g in self.groebner_basis()]
        return mono.is_zero_dimensional(lts, self.ring.ambient.nvars)

    def is_graded(self):
        """True when the generators and the ring's relations are all
        homogeneous under a common strictly positive weight vector.  Then
        the affine quotient is supported at the origin alone, so affine
        counts (standard monomials) are already local counts."""
        if self._graded is None:
            w = find_positive_grading(
                list(self.gens) + list(self.ring.relations),
                self.ring.ambient.nvars,
            )
            self._graded = w is not None
        return self._graded

    def length(self):
        """Local colength lambda(R/I), the length of the localization at m.

        Counted as standard monomials of the preimage's reduced Groebner
        basis.  For non-graded data the affine quotient can pick up points
        away from the origin; their contribution is exactly the stable
        submodule m^N(R/I), N >> 0, and is subtracted off."""
        if self._length is None:
            if self.is_unit():
                self._length = 0
                return self._length
            if not self.is_m_primary(strict=False):
                raise NotMPrimaryError("non-m-primary ideal has infinite length")
            if self.is_graded():
                lts = [g.leading_monomial() for g in self.groebner_basis()]
                self._length = mono.count_standard_monomials(lts, self.ring.ambient.nvars)
            else:
                std = self.standard_monomial_list()
                self._length = len(std) - self._dimension_off_origin()
        return self._length

    def _dimension_off_origin(self):
        """dim_k of m^N(R/I) for N >> 0.

        The affine quotient is a product of local Artinian factors;
        multiplication by m eventually annihilates the factor at the
        origin and is stable on the rest, so the iterated image of m
        stabilizes at the off-origin contribution.  Stabilization is
        certified by m*W = W, never by a step count."""
        std = self.standard_monomial_list()
        index = {e: i for i, e in enumerate(std)}
        nvars = self.ring.ambient.nvars
        units = [tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars)]
        mats = []
        for u in units:
            col = []
            for e in std:
                p = self._nf_monomial(monomial_mul(e, u))
                col.append({index[e2]: c for e2, c in p.terms.items()})
            mats.append(col)
        current = [{j: 1} for j in range(len(std))]
        dim = len(std)
        while True:
            rref = SparseRREF()
            for vec in current:
                for col in mats:
                    img = {}
                    for j, c in vec.items():
                        for i2, c2 in col[j].items():
                            s = img.get(i2, 0) + c * c2
                            if s == 0:
                                img.pop(i2, None)
                            else:
                                img[i2] = s
                    rref.add_row(img)
            if rref.rank == dim:
                return dim
            dim = rref.rank
            current = list(rref.pivot_rows.values())

    def standard_monomial_list(self):
        """Standard monomials, sorted increasingly in the ambient order."""
        if self._std_monomials is None:
            if not self.is_m_primary(strict=False):
                raise NotMPrimaryError("non-m-primary ideal has infinite colength")
            lts = [g.leading_monomial() for g in self.groebner_basis()]
            order = self.ring.ambient.order
            std = mono.standard_monomials(lts, self.ring.ambient.nvars)
            self._std_monomials = sorted(std, key=order.key)
        return self._std_monomials

    def minimal_generator_count(self):
        """mu(I) = dim I/(mI), for m-primary ideals, via colengths."""
        m = self.ring.maximal_ideal()
        return (m * self).length() - self.length()

    def order_in_m(self, cap=DEFAULT_POWER_CAP):
        """o(I): the largest n with I inside m^n."""
        if self.is_zero():
            raise ValueError("o(I) is undefined for the zero ideal")
        if self._order_in_m is None:
            m = self.ring.maximal_ideal()
            n = 1
            while n <= cap:
                if not all(m.power(n + 1).contains(g) for g in self.gens):
                    break
                n += 1
            else:
                raise CapExceededError("order_in_m", cap)
            self._order_in_m = n
        return self._order_in_m

    # -- ring maps ----------------------------------------------------

    def in_quotient(self, new_ring: RingPresentation):
        """The image of this ideal under R -> R/(x), reusing preimage
        generators."""
        if new_ring.ambient != self.ring.ambient:
            raise RingMismatchError("quotient presentation has a different ambient ring")
        return Ideal(new_ring, list(self.gens))


def unit_ideal(ring: RingPresentation):
    return Ideal(ring, [ring.ambient.one])


def random_combination(ideal: Ideal, rng, bound=1):
    """Sum of the generators with integer coefficients drawn uniformly from
    [-bound, bound], resampled until nonzero.  Deterministic given the rng
    state."""
    if not ideal.gens:
        raise ValueError("random combination of the zero ideal")
    field = ideal.ring.ambient.field
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in ideal.gens]
        if all(c == 0 for c in coeffs):
            continue
        total = ideal.ring.ambient.zero
        for c, g in zip(coeffs, ideal.gens):
            if c:
                total = total + g.scale(field(c))
        if not total.is_zero():
            return total


# -- homogeneous generator trimming -----------------------------------


def _trim_homogeneous(gens, ring):
    """Drop linearly dependent generators when all generators are
    homogeneous of one degree (products of powers of an equigenerated
    ideal).  Keeps product generator lists from growing exponentially."""
    if len(gens) <= 8:
        return gens
    degs = {g.total_degree() for g in gens}
    if len(degs) != 1 or any(not g.is_homogeneous() for g in gens):
        return gens
    rref = SparseRREF()
    colindex = {}
    kept = []
    for g in gens:
        row = {}
        for e, c in g.terms.items():
            j = colindex.setdefault(e, len(colindex))
            row[j] = c
        if rref.add_row(row) is not None:
            kept.append(g)
    return kept


# -- colon via linear algebra on the finite quotient -------------------


def _colon_linear_algebra(A: Ideal, bgens):
    """(A : B) for m-primary A: the kernel of the multiplication maps by
    B's generators on the finite-dimensional quotient, lifted back."""
    std = A.standard_monomial_list()
    index = {e: i for i, e in enumerate(std)}
    ambient = A.ring.ambient
    rows = []
    for b in bgens:
        # constraint rows: for candidate f = sum_j c_j u_j, require
        # NF(u_j * b) to cancel coordinate-wise
        cols = []
        for u in std:
            p = A.reduce(b.mul_term(u, ambient.field.one))
            cols.append(p.terms)
        targets = sorted({e for col in cols for e in col}, key=ambient.order.key)
        for v in targets:
            row = {}
            for j, col in enumerate(cols):
                c = col.get(v)
                if c:
                    row[j] = c
            rows.append(row)
    kernel = nullspace(rows, len(std))
    gens = list(A.gens)
    for vec in kernel:
        p = Polynomial(ambient, {std[j]: c for j, c in vec.items()})
        gens.append(p.primitive())
    return Ideal(A.ring, gens)


# -- colon and intersection via elimination ----------------------------

_AUX = "elim_t"


def _extended_ring(ambient):
    name = _AUX
    while name in ambient.variables:
        name += "_"
    ext = ambient.extend((name,), order=EliminationOrder(1))
    return ext


def _lift(p, ext):
    return Polynomial(ext, {(0,) + e: c for e, c in p.terms.items()})


def _descend(p, ambient):
    return Polynomial(ambient, {e[1:]: c for e, c in p.terms.items()})


def _intersect_elimination(ring, agens, cgens):
    """Generators of (agens) cap (cgens) in the ambient ring, via
    t*A + (1-t)*C and elimination of t."""
    ambient = ring.ambient
    ext = _extended_ring(ambient)
    t = ext.gen(0)
    one = ext.one
    lifted = [t * _lift(g, ext) for g in agens]
    lifted += [(one - t) * _lift(g, ext) for g in cgens]
    gb = buchberger(lifted)
    out = []
    for p in gb:
        if all(e[0] == 0 for e in p.terms):
            out.append(_descend(p, ambient))
    return out


def _colon_elimination_single(A: Ideal, b):
    """(A : b) = (1/b) * (A cap (b)), intersection by elimination."""
    agens = list(A.gens) + list(A.ring.relations)
    meet = _intersect_elimination(A.ring, agens, [b])
    gens = [q.exact_div(b) for q in meet]
    return Ideal(A.ring, gens)


def _colon_elimination_multi(A: Ideal, bgens):
    result = None
    for b in bgens:
        piece = _colon_elimination_single(A, b)
        if result is None:
            result = piece
        else:
            meet = _intersect_elimination(
                A.ring,
                list(result.gens) + list(A.ring.relations),
                list(piece.gens) + list(A.ring.relations),
            )
            result = Ideal(A.ring, meet)
    return result
