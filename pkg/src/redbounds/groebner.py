"""Normal forms and reduced Groebner bases (Buchberger's algorithm).

The pair queue is processed degree by degree (normal selection) and both
standard criteria are applied: the coprime-leading-monomial criterion and
the chain criterion.  S-pairs of two single-term generators are dropped
outright (their S-polynomial is identically zero).  Over Q every basis
element is kept primitive (integer coefficients, content 1) to tame
coefficient growth; the final output is monic, auto-reduced and sorted by
leading monomial, hence canonical.
"""

import heapq

from .errors import RingMismatchError
from .orders import monomial_div, monomial_divides, monomial_lcm, monomial_mul
from .poly import Polynomial


class _ReducerSet:
    """Reducers bucketed for fast 'who divides this monomial' lookups."""

    def __init__(self, order):
        self.order = order
        self.entries = []  # (degree, lm, lc, terms) sorted by degree then key
        self._dirty = False

    def add(self, poly):
        lm = poly.leading_monomial(self.order)
        self.entries.append((sum(lm), lm, poly.terms[lm], poly.terms))
        self._dirty = True

    def _sorted(self):
        if self._dirty:
            self.entries.sort(key=lambda t: (t[0], self.order.key(t[1])))
            self._dirty = False
        return self.entries

    def find(self, e):
        deg = sum(e)
        for entry in self._sorted():
            if entry[0] > deg:
                return None
            if monomial_divides(entry[1], e):
                return entry
        return None


def normal_form(f, basis, order=None):
    """Full multivariate division remainder of f by the given basis.

    No monomial of the result is divisible by any basis leading monomial,
    and f minus the result lies in the ideal generated by the basis.  The
    reducer choice is fixed (smallest leading monomial first) so the
    result is deterministic even when the basis is not a Groebner basis.
    """
    ring = f.ring
    order = order or ring.order
    reducers = _ReducerSet(order)
    for g in basis:
        if g.is_zero():
            continue
        if g.ring != ring:
            raise RingMismatchError("normal_form: basis element in a different ring")
        reducers.add(g)
    return _reduce(f, reducers, order)


def _reduce(f, reducers, order):
    work = dict(f.terms)
    if not work:
        return f
    out = {}
    heapkey = order.heapkey
    heap = [(heapkey(e), e) for e in work]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        hit = reducers.find(e)
        if hit is None:
            out[e] = c
            continue
        _, lm, lc, terms = hit
        q = monomial_div(e, lm)
        factor = c / lc
        for ed, cd in terms.items():
            if ed == lm:
                continue
            et = monomial_mul(ed, q)
            s = work.get(et, 0) - factor * cd
            if s == 0:
                work.pop(et, None)
            else:
                if et not in work:
                    heapq.heappush(heap, (heapkey(et), et))
                work[et] = s
    return Polynomial(f.ring, out)


def s_polynomial(f, g, order=None):
    order = order or f.ring.order
    lmf = f.leading_monomial(order)
    lmg = g.leading_monomial(order)
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_term(monomial_div(lcm, lmf), f.ring.field.one / f.terms[lmf]) - g.mul_term(
        monomial_div(lcm, lmg), g.ring.field.one / g.terms[lmg]
    )


def interreduce(polys, order=None):
    """One pass of mutual reduction: each input is replaced by its normal
    form against the previously accepted ones (smaller leading monomials
    first).  Preserves the generated ideal; shrinks huge generator lists
    before the pair phase."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    ring = polys[0].ring
    order = order or ring.order
    polys = list({p.primitive(order) for p in polys})
    polys.sort(key=lambda p: order.key(p.leading_monomial(order)))
    reducers = _ReducerSet(order)
    accepted = []
    for p in polys:
        r = _reduce(p, reducers, order) if accepted else p
        if not r.is_zero():
            r = r.primitive(order)
            accepted.append(r)
            reducers.add(r)
    return accepted


def buchberger(gens, order=None, interreduce_input=True):
    """The unique reduced Groebner basis of the ideal generated by `gens`.

    Output polynomials are monic, fully tail-reduced, and sorted by
    increasing leading monomial; any generating set of the same ideal
    yields the identical sequence.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("buchberger: generators in different rings")
    order = order or ring.order

    basis = interreduce(gens, order) if interreduce_input else [
        g.primitive(order) for g in gens
    ]
    if not basis:
        return []

    lms = [g.leading_monomial(order) for g in basis]
    monomial_flags = [g.is_monomial() for g in basis]
    reducers = _ReducerSet(order)
    for g in basis:
        reducers.add(g)

    pending = set()
    heap = []

    def push_pair(i, j):
        if monomial_flags[i] and monomial_flags[j]:
            return  # S-polynomial of two terms is identically zero
        lcm = monomial_lcm(lms[i], lms[j])
        if lcm == monomial_mul(lms[i], lms[j]):
            return  # coprime criterion
        pending.add((i, j))
        heapq.heappush(heap, (sum(lcm), order.heapkey(lcm), i, j))

    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = monomial_lcm(lms[i], lms[j])
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if not monomial_divides(lms[k], lcm):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        s = s_polynomial(basis[i], basis[j], order)
        r = _reduce(s, reducers, order)
        if r.is_zero():
            continue
        r = r.primitive(order)
        basis.append(r)
        lms.append(r.leading_monomial(order))
        monomial_flags.append(r.is_monomial())
        reducers.add(r)
        t = len(basis) - 1
        for i2 in range(t):
            push_pair(i2, t)

    return _reduced_form(basis, lms, order)


def _reduced_form(basis, lms, order):
    # minimal generators of the leading-term ideal
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if monomial_divides(other, lm) and (
                other != lm or j < i
            ):
                redundant = True
                break
        if redundant:
            continue
        keep.append(i)
    minimal = [basis[i] for i in keep]
    # full tail reduction, then monic
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, order) if others else g
        out.append(r.monic(order))
    out.sort(key=lambda p: order.key(p.leading_monomial(order)))
    return out
