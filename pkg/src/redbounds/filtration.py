"""The Ratliff-Rush filtration and its derived invariants.

The Ratliff-Rush closure of I^n is the union of the increasing chain
(I^{n+t} : I^t), t >= 1; it is the largest ideal with the same high
powers as I^n.  We compute the chain term by term — using the identity
(A : BC) = ((A : B) : C) to colon by I^t one factor at a time — and
declare it stable only after seeing the same ideal three times in a row
(two confirmations), reporting a certified flag.

Derived data: rho(I) (the power past which closure is trivial),
positivity of depth G(I^t), the v-numbers v_n = lambda of the closure of
I^{n+1} modulo J times the closure of I^n, and the reduction number of
the closed filtration.
"""

from .errors import CapExceededError, ClosureError
from .ideal import Ideal

DEFAULT_CHAIN_CAP = 20
CONFIRMATIONS = 2
TRAILING_WINDOW = 3


class ClosureResult:
    """Ratliff-Rush closure of one power, with its provenance."""

    def __init__(self, ideal, power, stable_t, certified):
        self.ideal = ideal
        self.power = power
        self.stable_t = stable_t
        self.certified = certified

    def __repr__(self):
        return "ClosureResult(power=%d, stable_t=%d, certified=%s)" % (
            self.power,
            self.stable_t,
            self.certified,
        )


def ratliff_rush_power(ideal, n, cap=DEFAULT_CHAIN_CAP):
    """The Ratliff-Rush closure of I^n via the colon chain.

    Returns a ClosureResult whose `certified` flag records that the chain
    value repeated CONFIRMATIONS extra times.  If the chain is still
    moving at `cap` steps the last term is returned uncertified; callers
    must check the flag.
    """
    if n < 1:
        raise ValueError("closure is defined for positive powers")
    current = None
    streak = 0
    for t in range(1, cap + 1):
        term = ideal.power(n + t)
        for _ in range(t):
            term = term.colon(ideal)
        if current is not None:
            if not term.contains_ideal(current):
                raise ClosureError(
                    "colon chain for power %d is not ascending at t=%d" % (n, t)
                )
            # ascending chain: locally equal iff equal local colengths
            if current.length() == term.length():
                streak += 1
                if streak >= CONFIRMATIONS:
                    return ClosureResult(current, n, t - CONFIRMATIONS, True)
                continue
        current = term
        streak = 0
    return ClosureResult(current, n, cap, False)


class FiltrationTable:
    """Closures of I^1..I^horizon plus the equality pattern with plain
    powers.  The workhorse object behind rho, depth positivity and the
    v-numbers."""

    def __init__(self, ideal, horizon, cap=DEFAULT_CHAIN_CAP):
        self.ideal = ideal
        self.horizon = 0
        self.cap = cap
        self.closures = {}
        self.equals_power = {}
        self.certified = True
        self.extend(horizon)

    def extend(self, horizon):
        """Grow the table up to a larger horizon; already-computed powers
        are kept."""
        for n in range(self.horizon + 1, horizon + 1):
            res = ratliff_rush_power(self.ideal, n, cap=self.cap)
            self.certified = self.certified and res.certified
            self.closures[n] = res.ideal
            # I^n sits inside its closure, so local equality is equality
            # of local colengths
            self.equals_power[n] = (
                res.ideal.length() == self.ideal.power(n).length()
            )
        self.horizon = max(self.horizon, horizon)

    def closure(self, n):
        return self.closures[n]

    def rho(self):
        """Least n0 with closure(I^n) = I^n for every computed n >= n0.

        Trustworthy when the trailing TRAILING_WINDOW powers are all
        equalities; callers should raise the horizon otherwise."""
        last_bad = 0
        for n in range(1, self.horizon + 1):
            if not self.equals_power[n]:
                last_bad = n
        return last_bad + 1

    def rho_is_stable(self):
        tail = [
            self.equals_power[n]
            for n in range(max(1, self.horizon - TRAILING_WINDOW + 1), self.horizon + 1)
        ]
        return all(tail)


def rho(ideal, horizon=8, cap=DEFAULT_CHAIN_CAP):
    """rho(I) with a stability check on the trailing window."""
    table = FiltrationTable(ideal, horizon, cap=cap)
    if not table.rho_is_stable():
        raise CapExceededError("rho trailing window", horizon)
    return table.rho()


def depth_g_positive(ideal, t=1, horizon=8, cap=DEFAULT_CHAIN_CAP):
    """Whether the associated graded ring of I^t has positive depth,
    equivalently whether every power of I^t is Ratliff-Rush closed."""
    table = FiltrationTable(ideal.power(t), horizon, cap=cap)
    if not table.rho_is_stable():
        raise CapExceededError("depth_g trailing window", horizon)
    return table.rho() == 1


def v_numbers(ideal, reduction, horizon, table=None, cap=DEFAULT_CHAIN_CAP):
    """v_n = lambda(closure(I^{n+1}) / J*closure(I^n)) for n = 0..horizon-1,
    where J is a reduction of I and closure(I^0) = R.

    Containment J*closure(I^n) inside closure(I^{n+1}) is a theorem; if a
    computed table violates it something upstream is wrong, and we raise
    ClosureError rather than return garbage.
    """
    if table is None:
        table = FiltrationTable(ideal, horizon, cap=cap)
    out = []
    for n in range(0, horizon):
        top = table.closure(n + 1)
        if n == 0:
            bottom = reduction
        else:
            bottom = reduction * table.closure(n)
        if not top.locally_contains_ideal(bottom):
            raise ClosureError(
                "J*closure(I^%d) not inside closure(I^%d); filtration data "
                "is inconsistent" % (n, n + 1)
            )
        out.append(bottom.length() - top.length())
    return out


def closed_filtration_reduction_number(ideal, reduction, horizon, table=None,
                                       cap=DEFAULT_CHAIN_CAP):
    """The least r with closure(I^{n+1}) = J*closure(I^n) for all computed
    n >= r, checked to hold on a trailing window of TRAILING_WINDOW values.
    """
    vs = v_numbers(ideal, reduction, horizon, table=table, cap=cap)
    if any(v != 0 for v in vs[-TRAILING_WINDOW:]):
        raise CapExceededError("closed filtration reduction number", horizon)
    last_bad = 0
    for n, v in enumerate(vs):
        if v != 0:
            last_bad = n + 1
    return last_bad


# the closed-filtration reduction number is usually written r-tilde
rtilde = closed_filtration_reduction_number
