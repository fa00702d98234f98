"""Exact coefficient fields: the rationals Q and prime fields F_p.

No floating point is used anywhere.  Over Q, coefficients are gmpy2.mpq
values (arbitrary-precision, always reduced, positive denominator); over
F_p they are ModInt residues with 0 <= value < p.  F_p exists for fast
exploratory search only; certified runs use Q, because unlucky primes can
change colengths.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpq = Fraction


class RationalField:
    """The field Q.  A stateless singleton; elements are mpq values."""

    name = "Q"
    characteristic = 0

    def __call__(self, numerator, denominator=1):
        if denominator == 0:
            raise ZeroDivisionError("rational with zero denominator")
        return _mpq(numerator, denominator)

    @property
    def zero(self):
        return _mpq(0)

    @property
    def one(self):
        return _mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("redbounds.QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class ModInt:
    """A residue modulo a prime.  Supports the arithmetic the polynomial
    layer needs; comparison with plain ints works so `c == 0` is cheap."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        if isinstance(other, ModInt):
            return ModInt(self.value + other.value, self.p)
        return ModInt(self.value + other, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ModInt):
            return ModInt(self.value - other.value, self.p)
        return ModInt(self.value - other, self.p)

    def __rsub__(self, other):
        return ModInt(other - self.value, self.p)

    def __mul__(self, other):
        if isinstance(other, ModInt):
            return ModInt(self.value * other.value, self.p)
        return ModInt(self.value * other, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __pow__(self, n):
        return ModInt(pow(self.value, n, self.p), self.p)

    def __truediv__(self, other):
        if not isinstance(other, ModInt):
            other = ModInt(other, self.p)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModInt(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        return ModInt(other, self.p) / self

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d" % self.value


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field F_p for a prime p (default class: 2^31 - 1)."""

    DEFAULT_PRIME = 2**31 - 1
    characteristic = None  # set per instance

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("modulus %d is not prime" % p)
        self.p = p
        self.name = "F%d" % p
        self.characteristic = p

    def __call__(self, numerator, denominator=1):
        value = ModInt(numerator, self.p)
        if denominator != 1:
            value = value / ModInt(denominator, self.p)
        return value

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("redbounds.GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p
