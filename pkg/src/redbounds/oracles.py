"""Independent cross-checks for the main pipeline.

Nothing here is used by the pipeline itself.  Each routine recomputes an
invariant along a different mathematical route, so agreement is genuine
evidence and not a tautology.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, product

from .groebner import normal_form
from .linalg import rank, solve_dense
from .orders import monomial_mul


def _truncated_colength(gb, nvars, N):
    """dim_k of k[x]/(I + m^N) via linear algebra: monomials of degree
    less than N modulo the truncations of all monomial multiples of the
    Groebner basis that survive truncation."""
    index = {}
    for deg in range(N):
        for combo in combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            index[tuple(e)] = len(index)
    rows = []
    for g in gb:
        gmin = min(sum(e) for e in g.terms)
        for e in index:
            # u*g is zero mod m^N once even its lowest term reaches N
            if sum(e) + gmin >= N:
                continue
            row = {}
            for eg, c in g.terms.items():
                prod = monomial_mul(e, eg)
                if sum(prod) < N:
                    row[index[prod]] = c
            if row:
                rows.append(row)
    return len(index) - rank(rows)


def length_by_truncation(ideal, max_degree=80):
    """The local colength lambda(R/I) by plain linear algebra, with no
    staircase counting.

    Computes dim k[x]/(I + m^N) for growing N.  The sequence is
    nondecreasing, and equality at two consecutive N forces
    m^N = m^{N+1} modulo I, which (Nakayama, in the localization) pushes
    m^N into I locally — so the first repeat is a certificate that the
    value has stabilized at the length of the localization at m.
    """
    gb = ideal.groebner_basis()
    ambient = ideal.ring.ambient
    nvars = ambient.nvars
    if any(g.is_constant() for g in gb):
        return 0
    if not gb:
        raise ValueError("zero ideal has infinite colength")
    N = 1 + max(g.total_degree() for g in gb)
    prev = _truncated_colength(gb, nvars, N)
    while N < max_degree:
        N += 1
        cur = _truncated_colength(gb, nvars, N)
        if cur == prev:
            return cur
        prev = cur
    raise ValueError("truncated colength did not stabilize below degree %d"
                     % max_degree)


def ratliff_rush_via_reduction(ideal, n, reduction, max_k=16):
    """The Ratliff-Rush closure of I^n computed as (I^{n+k} : (x_1^k, ...,
    x_d^k)) for the generators x_i of a reduction J of I, with k doubling
    until two consecutive agreements.

    The union over k of these colons equals the closure because J is a
    reduction; it is an independent route from the definitional chain
    (I^{n+t} : I^t): the colon here is by a d-generated ideal of k-th
    powers rather than by powers of I itself.
    """
    from .ideal import Ideal

    ring = ideal.ring
    prev = None
    k = 1
    while k <= max_k:
        powers = Ideal(ring, [x ** k for x in reduction.gens])
        result = ideal.power(n + k).colon(powers)
        # the chain ascends with k; local equality = equal local colengths
        if prev is not None and result.contains_ideal(prev) \
                and prev.length() == result.length():
            return result
        prev = result
        k *= 2
    raise ValueError("power-colon chain did not stabilize within max_k")


def _lp_feasible(A_ub, b_ub, A_eq, b_eq, nvars):
    """Exact feasibility of A_ub*x <= b_ub, A_eq*x == b_eq, x >= 0, by a
    phase-one simplex over Fractions.  Tiny systems only."""
    rows = []
    rhs = []
    for a, b in zip(A_ub, b_ub):
        rows.append(list(a))
        rhs.append(Fraction(b))
    for a, b in zip(A_eq, b_eq):
        rows.append(list(a))
        rhs.append(Fraction(b))
    nslack = len(A_ub)
    m = len(rows)
    # tableau columns: x (nvars) | slack (nslack) | artificial (m) | rhs
    width = nvars + nslack + m
    table = []
    for i, row in enumerate(rows):
        line = [Fraction(v) for v in row] + [Fraction(0)] * (nslack + m) + [rhs[i]]
        if i < nslack:
            line[nvars + i] = Fraction(1)
        if line[-1] < 0:
            line = [-v for v in line]
        line[nvars + nslack + i] = Fraction(1)
        table.append(line)
    # objective: minimize sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for line in table:
        for j in range(width + 1):
            obj[j] -= line[j]
    for i in range(m):
        obj[nvars + nslack + i] = Fraction(0)
    basis = [nvars + nslack + i for i in range(m)]
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, line in enumerate(table):
            if line[enter] > 0:
                ratio = line[-1] / line[enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False  # unbounded phase-one: cannot happen, treat as infeasible
        _, pivot_i = best
        pline = table[pivot_i]
        pv = pline[enter]
        table[pivot_i] = [v / pv for v in pline]
        for i in range(m):
            if i != pivot_i and table[i][enter] != 0:
                f = table[i][enter]
                table[i] = [a - f * b for a, b in zip(table[i], table[pivot_i])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, table[pivot_i])]
        basis[pivot_i] = enter
    return -obj[-1] == 0


def monomial_in_integral_closure(exponent, gens, n=1):
    """Whether x^exponent lies in the integral closure of (the n-th power
    of) the monomial ideal with the given generator exponents.

    For monomial ideals the closure is the set of lattice points of the
    Newton polyhedron: exponent must dominate a convex combination of n
    generators (coefficients summing to n)."""
    k = len(gens)
    nv = len(exponent)
    A_ub = [[g[i] for g in gens] for i in range(nv)]
    b_ub = list(exponent)
    return _lp_feasible(A_ub, b_ub, [[1] * k], [n], k)


def normal_hilbert_coefficients(ideal, dimension):
    """Hilbert coefficients of the integral-closure filtration of a
    monomial m-primary ideal, via exact lattice-point counting in dilated
    Newton polyhedra.

    The closure filtration's function lambda(R/closure(I^n)) agrees with
    its polynomial from the start of a window of dimension+2 values with
    constant top difference; the fitted coefficients are verified on two
    fresh values.  Returns a tuple of dimension+1 integers."""
    if not ideal.is_monomial_ideal:
        raise ValueError("normal coefficients need a monomial ideal")
    from . import monomial_ideal as mono

    gens = ideal.monomial_exponents()
    nv = ideal.ring.ambient.nvars
    if not mono.is_zero_dimensional(gens, nv):
        raise ValueError("normal coefficients need an m-primary ideal")
    bounds = mono.pure_power_bounds(gens, nv)
    d = dimension

    def value(n):
        box = [range(b * n) for b in bounds]
        count = 0
        for p in product(*box):
            if not monomial_in_integral_closure(p, gens, n):
                count += 1
        return count

    values = {0: 0}
    needed = d + 4  # window of d+2 plus two verification points
    for n in range(1, needed + 1):
        values[n] = value(n)
    # check the d-th forward difference is constant over the window
    seq = [values[n] for n in range(0, needed + 1)]
    diffs = seq
    for _ in range(d):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    window = diffs[1:1 + 3]
    if len(set(window)) != 1:
        raise ValueError("closure filtration not yet polynomial; enlarge window")

    def binom(n, k):
        out = 1
        for i in range(k):
            out = out * (n - i) // (i + 1)
        return out

    fit_ns = list(range(1, d + 2))
    matrix = [[binom(n + d - 1 - i, d - i) for i in range(d + 1)] for n in fit_ns]
    rhsv = [values[n] for n in fit_ns]
    from .field import QQ

    sol = solve_dense(matrix, rhsv, QQ)
    coeffs = []
    for i, c in enumerate(sol):
        if c.denominator != 1:
            raise ValueError("non-integer normal coefficient")
        coeffs.append(int(c) if i % 2 == 0 else -int(c))
    # verification on the two remaining values
    for n in range(d + 2, needed + 1):
        predicted = sum(
            (-1) ** i * coeffs[i] * binom(n + d - 1 - i, d - i)
            for i in range(d + 1)
        )
        if predicted != values[n]:
            raise ValueError("normal coefficient fit failed verification")
    return tuple(coeffs)


def membership_by_normal_form(f, gens_plus_relations):
    """Ideal membership via a one-off Groebner computation, bypassing the
    cached machinery on Ideal."""
    from .groebner import buchberger

    gb = buchberger(list(gens_plus_relations))
    return normal_form(f, gb).is_zero()
