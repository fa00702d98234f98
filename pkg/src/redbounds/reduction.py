"""Reductions of m-primary ideals: certificates, search for minimal
reductions, reduction numbers, and superficial elements.

J inside I is a reduction when I^{n+1} = J*I^n for some n; the least such
n is the reduction number r_J(I).  A candidate r is accepted only with a
telescoping confirmation: once I^{r+1} = J*I^r holds, equality at r+2 and
r+3 follows formally, but we recheck the next two powers anyway as a
guard against bookkeeping bugs.  Searches draw small random integer
combinations of the generators from a seeded RNG, so runs are replayable.
"""

from .errors import CapExceededError, NotMPrimaryError
from .hilbert import hilbert_coefficients, krull_dimension
from .ideal import Ideal, random_combination

MAX_RANDOM_ATTEMPTS = 40
COEFF_BOUNDS = (1, 2, 4)


class ReductionCertificate:
    """Evidence that J is a reduction of I with reduction number r."""

    def __init__(self, ideal, reduction, r, confirmed_powers):
        self.ideal = ideal
        self.reduction = reduction
        self.r = r
        self.confirmed_powers = tuple(confirmed_powers)

    def __repr__(self):
        return "ReductionCertificate(r=%d, confirmed=%s)" % (
            self.r,
            list(self.confirmed_powers),
        )


def reduction_search_cap(ideal, dimension=None):
    """A safe horizon for the reduction-number scan: r_J(I) of any ideal
    here is far below d*e0(I)/o(I), so scanning to that point and failing
    is strong evidence J is not a reduction at all."""
    d = dimension if dimension is not None else krull_dimension(ideal.ring)
    if d == 0:
        # lambda(R) bounds the nilpotency index of any proper ideal
        return max(4, Ideal(ideal.ring, []).length())
    e0 = hilbert_coefficients(ideal, dimension=d).multiplicity
    o = ideal.order_in_m()
    return max(4, (d * e0) // o - 2 * d + 1)


def is_reduction_with_number(ideal, reduction, cap=None):
    """If J is a reduction of I, return its ReductionCertificate; else None.

    Scans r = 0, 1, ... for I^{r+1} = J*I^r and confirms the two following
    powers.  J must be contained in I.  The equality is taken in the local
    ring: J*I^r sits inside I^{r+1} for free, so local equality is exactly
    equality of the two colengths."""
    if not ideal.contains_ideal(reduction):
        raise ValueError("candidate reduction is not contained in the ideal")
    if cap is None:
        cap = reduction_search_cap(ideal)
    for r in range(0, cap + 1):
        In = ideal.power(r)
        JIn = reduction * In
        if not JIn.is_m_primary(strict=False):
            # J*I^r has infinite colength, I^{r+1} does not: never equal
            continue
        if ideal.power(r + 1).length() == JIn.length():
            confirmed = []
            for extra in (1, 2):
                k = r + extra
                if ideal.power(k + 1).length() == (reduction * ideal.power(k)).length():
                    confirmed.append(k)
                else:
                    # telescoping makes these equalities automatic; a miss
                    # can only come from corrupted ideal arithmetic
                    raise RuntimeError(
                        "reduction equality failed to telescope at power %d" % k
                    )
            return ReductionCertificate(ideal, reduction, r, confirmed)
    return None


def find_minimal_reduction(ideal, rng, dimension=None, cap=None,
                           attempts=MAX_RANDOM_ATTEMPTS):
    """A minimal reduction of I: d random combinations of the generators.

    Over an infinite field, d generic combinations generate a minimal
    reduction; small integer coefficients almost always suffice, and the
    coefficient bound escalates (1, 2, 4) if they do not.  The result is
    deterministic for a fixed rng state.  Raises CapExceededError when
    every attempt fails.
    """
    d = dimension if dimension is not None else krull_dimension(ideal.ring)
    if d == 0:
        return ReductionCertificate(ideal, Ideal(ideal.ring, []), _nilpotency(ideal), ())
    # in a polynomial ring (Cohen-Macaulay), a d-generated m-primary J is a
    # reduction of I exactly when lambda(R/J) = e_0(I); screening on that
    # equality rejects bad draws without the expensive power scan
    e0 = None
    if ideal.ring.is_polynomial_ring:
        e0 = hilbert_coefficients(ideal, dimension=d).multiplicity
    base = _minimalized(ideal)
    for bound in COEFF_BOUNDS:
        for _ in range(attempts):
            elems = [random_combination(base, rng, bound) for _ in range(d)]
            J = Ideal(ideal.ring, elems)
            if len(J.gens) < d or not J.is_m_primary(strict=False):
                continue
            if e0 is not None and J.length() != e0:
                continue
            cert = is_reduction_with_number(ideal, J, cap=cap)
            if cert is not None:
                return cert
    raise CapExceededError("find_minimal_reduction attempts", attempts * len(COEFF_BOUNDS))


def _minimalized(ideal):
    """The same ideal with redundant monomial generators dropped, so that
    random combinations stay low-degree.  Non-monomial generator lists are
    kept as given."""
    if not ideal.gens_are_monomial:
        return ideal
    amb = ideal.ring.ambient
    exps = ideal.monomial_exponents()
    if len(exps) == len(ideal.gens):
        return ideal
    return Ideal(ideal.ring, [amb.monomial(e) for e in exps])


def _nilpotency(ideal):
    """In dimension zero the reduction is (0) and r is the index with
    I^{r+1} = 0."""
    r = 0
    while not ideal.power(r + 1).is_zero():
        r += 1
        if r > 1 + ideal.length():
            raise CapExceededError("nilpotency index", ideal.length())
    return r


class SuperficialCertificate:
    """Evidence that x is superficial for I, in the numerical sense: the
    Hilbert coefficients e_0..e_{d-1} survive passage to R/(x)."""

    def __init__(self, element, quotient_ring, checked_coefficients):
        self.element = element
        self.quotient_ring = quotient_ring
        self.checked_coefficients = tuple(checked_coefficients)

    def __repr__(self):
        return "SuperficialCertificate(%s)" % self.element


def find_superficial_element(ideal, rng, dimension=None,
                             attempts=MAX_RANDOM_ATTEMPTS):
    """A superficial element of I, certified numerically.

    x in I is accepted when dim R/(x) = d-1 and the coefficients
    e_0, ..., e_{d-1} of I are preserved in R/(x) — the standard
    characterization of superficiality for our purposes.  Requires d >= 1.
    """
    d = dimension if dimension is not None else krull_dimension(ideal.ring)
    if d < 1:
        raise ValueError("superficial elements need positive dimension")
    target = hilbert_coefficients(ideal, dimension=d).coefficients[:d]
    base = _minimalized(ideal)
    for bound in COEFF_BOUNDS:
        for _ in range(attempts):
            x = random_combination(base, rng, bound)
            qring = ideal.ring.quotient_by_element(x)
            try:
                if krull_dimension(qring) != d - 1:
                    continue
                qideal = ideal.in_quotient(qring)
                if not qideal.is_m_primary(strict=False):
                    continue
                got = hilbert_coefficients(qideal, dimension=d - 1).coefficients
            except (CapExceededError, NotMPrimaryError, ValueError):
                continue
            if tuple(got[:d]) == tuple(target):
                return SuperficialCertificate(x, qring, got[:d])
    raise CapExceededError("find_superficial_element attempts",
                           attempts * len(COEFF_BOUNDS))
