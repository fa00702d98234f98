"""Combinatorics of monomial ideals on exponent tuples.

Product, power, colon, intersection and standard-monomial enumeration of
monomial ideals are pure staircase operations; the ideal layer dispatches
here whenever every generator is a single term, which keeps the large
randomized suites fast.  Results agree with the generic Groebner routes
(cross-checked in the test suite).
"""

from itertools import product as _cartesian

from .orders import (
    monomial_div,
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)


def minimalize(gens):
    """Minimal generators of the monomial ideal, sorted."""
    out = []
    for m in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def contains(gens, e):
    return any(monomial_divides(g, e) for g in gens)


def product(a_gens, b_gens):
    return minimalize([monomial_mul(a, b) for a in a_gens for b in b_gens])


def power(gens, n):
    if n == 0:
        raise ValueError("use the unit ideal for exponent 0")
    out = list(gens)
    for _ in range(n - 1):
        out = product(out, gens)
    return minimalize(out)


def intersect(a_gens, b_gens):
    return minimalize([monomial_lcm(a, b) for a in a_gens for b in b_gens])


def colon_single(a_gens, b):
    """(A : x^b) for a single monomial b."""
    out = []
    for g in a_gens:
        out.append(tuple(max(x - y, 0) for x, y in zip(g, b)))
    return minimalize(out)


def colon(a_gens, b_gens):
    """(A : B) for monomial ideals A, B."""
    result = None
    for b in b_gens:
        piece = colon_single(a_gens, b)
        result = piece if result is None else intersect(result, piece)
    if result is None:
        raise ValueError("colon by the zero ideal")
    return result


def is_zero_dimensional(gens, nvars):
    """True iff the quotient is finite: every variable has a pure power."""
    for i in range(nvars):
        if not any(
            g[i] > 0 and all(g[j] == 0 for j in range(nvars) if j != i) for g in gens
        ):
            return False
    return True


def pure_power_bounds(gens, nvars):
    """For each variable, the least pure-power exponent in the ideal."""
    bounds = []
    for i in range(nvars):
        exps = [
            g[i]
            for g in gens
            if g[i] > 0 and all(g[j] == 0 for j in range(nvars) if j != i)
        ]
        if not exps:
            return None
        bounds.append(min(exps))
    return bounds


def standard_monomials(gens, nvars):
    """All monomials outside the ideal; requires a zero-dimensional ideal.

    Depth-first over one variable at a time, filtering the generator list
    as the exponent grows, so the cost tracks the number of standard
    monomials rather than the bounding box volume.
    """
    gens = minimalize(gens)
    if pure_power_bounds(gens, nvars) is None:
        raise ValueError(
            "ideal is not zero-dimensional; infinitely many standard monomials"
        )

    out = []

    def walk(active, remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        a = 0
        while True:
            filtered = [g[1:] for g in active if g[0] <= a]
            # once a pure power of this variable enters, every larger
            # exponent is in the ideal too
            if any(all(x == 0 for x in t) for t in filtered):
                return
            prefix.append(a)
            walk(filtered, remaining - 1, prefix)
            prefix.pop()
            a += 1

    walk(gens, nvars, [])
    return out


def count_standard_monomials(gens, nvars):
    return len(standard_monomials(gens, nvars))
