"""Hilbert-Samuel functions, coefficients, Krull dimension and the basic
ring invariants (embedding dimension, Cohen-Macaulay type).

The Hilbert-Samuel function of an m-primary ideal I is H(n) = lambda(R/I^n).
For n large it agrees with a polynomial of degree d = dim R, written in the
binomial basis

    P(n) = e0*C(n+d-1, d) - e1*C(n+d-2, d-1) + ... + (-1)^d * e_d.

The coefficients are recovered by exact interpolation once the computed
values have entered the polynomial regime, detected by d-th forward
differences staying constant over a window; two extra fresh values are
then checked against the fitted polynomial, giving a certified fit.
"""

from math import comb

from .errors import CapExceededError, NotMPrimaryError
from .linalg import solve_dense

# how many consecutive constant d-th differences we require before
# trusting the polynomial regime, beyond the d+1 fit points
REGIME_WINDOW_EXTRA = 2


class HilbertData:
    """Computed Hilbert-Samuel data of one m-primary ideal.

    values[n] = lambda(R/I^n) for 1 <= n <= last computed power;
    coefficients = (e0, ..., ed); postulation = least n0 such that
    H(n) = P(n) for all n >= n0 among the computed values; certified is
    True when the regime window and the two verification points held.
    """

    def __init__(self, dimension, values, coefficients, postulation, certified):
        self.dimension = dimension
        self.values = dict(values)
        self.coefficients = tuple(coefficients)
        self.postulation = postulation
        self.certified = certified

    @property
    def multiplicity(self):
        return self.coefficients[0]

    def polynomial_value(self, n):
        d = self.dimension
        total = 0
        for i, e in enumerate(self.coefficients):
            total += (-1) ** i * e * comb(n + d - 1 - i, d - i)
        return total

    def __repr__(self):
        return "HilbertData(d=%d, e=%s, n0=%d, certified=%s)" % (
            self.dimension,
            list(self.coefficients),
            self.postulation,
            self.certified,
        )


def hilbert_samuel_value(ideal, n):
    """H(n) = lambda(R/I^n)."""
    if n == 0:
        return 0
    return ideal.power(n).length()


def _forward_diff(seq):
    return [b - a for a, b in zip(seq, seq[1:])]


def krull_dimension(ring, max_power=60):
    """dim R, as the degree of the Hilbert-Samuel polynomial of m.

    Returns the least d whose d-th forward differences of lambda(R/m^n)
    are constant over a comfortable window.  Caches the result on the
    ring presentation.
    """
    if ring.dimension is not None:
        return ring.dimension
    m = ring.maximal_ideal()
    nvars = ring.ambient.nvars
    values = []
    n = 0
    while True:
        need = len(values) + 1
        if need > max_power:
            raise CapExceededError("krull_dimension power", max_power)
        values.append(hilbert_samuel_value(m, need))
        n = need
        # try degrees from 0 up; the first that flattens wins
        for d in range(0, nvars + 1):
            diffs = values
            for _ in range(d):
                diffs = _forward_diff(diffs)
            window = d + 2 + REGIME_WINDOW_EXTRA
            if len(diffs) >= window and len(set(diffs[-window:])) == 1:
                ring.set_dimension(d)
                return d


def hilbert_coefficients(ideal, dimension=None, max_power=40):
    """Exact Hilbert coefficients (e0, ..., ed) of an m-primary ideal.

    Computes H(n) for increasing n until the d-th forward differences are
    constant over a window of d+2 values, interpolates the binomial-basis
    coefficients through the last d+1 values, then verifies the fit
    against two further powers.  Raises CapExceededError if the regime is
    not reached within max_power (minus the verification points).
    """
    if not ideal.is_m_primary(strict=False):
        raise NotMPrimaryError("Hilbert coefficients need an m-primary ideal")
    d = dimension if dimension is not None else krull_dimension(ideal.ring)
    field = ideal.ring.ambient.field

    values = {}

    def H(n):
        if n not in values:
            values[n] = hilbert_samuel_value(ideal, n)
        return values[n]

    window = d + 2
    n = 0
    regime_end = None
    while regime_end is None:
        n += 1
        if n + 2 > max_power:
            raise CapExceededError("hilbert_coefficients power", max_power)
        H(n)
        if n < window + d:
            continue
        seq = [H(k) for k in range(1, n + 1)]
        diffs = seq
        for _ in range(d):
            diffs = _forward_diff(diffs)
        if len(diffs) >= window and len(set(diffs[-window:])) == 1:
            regime_end = n

    # fit on the last d+1 values of the detected regime
    fit_points = list(range(regime_end - d, regime_end + 1))
    matrix = []
    rhs = []
    for p in fit_points:
        matrix.append([(-1) ** i * comb(p + d - 1 - i, d - i) for i in range(d + 1)])
        rhs.append(H(p))
    sol = solve_dense(matrix, rhs, field)
    coeffs = []
    for c in sol:
        if c != int(c):
            raise ValueError("non-integer Hilbert coefficient %s" % c)
        coeffs.append(int(c))

    data = HilbertData(d, values, coeffs, 0, False)

    # verify on two fresh powers
    certified = all(
        H(regime_end + k) == data.polynomial_value(regime_end + k) for k in (1, 2)
    )

    # postulation: least n0 with H(n) = P(n) for all computed n >= n0
    top = max(values)
    n0 = top
    while n0 > 0 and H(n0) == data.polynomial_value(n0):
        n0 -= 1
    postulation = n0 + 1

    data.postulation = postulation
    data.certified = certified
    return data


class RingInvariants:
    """Bundle of ring-level invariants used by the bound catalog."""

    def __init__(self, dimension, embedding_dimension, cm_type, mult):
        self.dimension = dimension
        self.embedding_dimension = embedding_dimension
        self.cm_type = cm_type
        self.multiplicity = mult

    def __repr__(self):
        return "RingInvariants(d=%d, embdim=%d, type=%s, e0=%d)" % (
            self.dimension,
            self.embedding_dimension,
            self.cm_type,
            self.multiplicity,
        )


def embedding_dimension(ring):
    """mu(m) = lambda(R/m^2) - lambda(R/m) = lambda(m/m^2)."""
    m = ring.maximal_ideal()
    return m.power(2).length() - 1


def cohen_macaulay_type(ring, system_of_parameters):
    """Type of a Cohen-Macaulay local ring: lambda((J:m)/J) for an ideal J
    generated by a system of parameters.

    In dimension zero pass the zero ideal (no parameters); the type is
    then the socle dimension lambda(0:m)."""
    from .ideal import Ideal

    m = ring.maximal_ideal()
    if system_of_parameters:
        J = Ideal(ring, list(system_of_parameters))
    else:
        J = Ideal(ring, [])
    if J.gens:
        if not J.is_m_primary(strict=False):
            raise NotMPrimaryError("parameters do not generate an m-primary ideal")
        socle = J.colon(m)
        return J.length() - socle.length()
    # dimension zero: socle of R itself = ann(m)
    zero = Ideal(ring, [])
    socle = _annihilator_of_m(ring)
    return zero.length() - socle.length()


def _annihilator_of_m(ring):
    """(0 : m) in an Artinian presentation, via the linear-algebra colon."""
    from .ideal import Ideal

    zero = Ideal(ring, [])
    return zero.colon(ring.maximal_ideal())
