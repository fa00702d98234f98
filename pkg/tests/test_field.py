"""Exact arithmetic: rationals via gmpy2 and prime fields."""

import random

from redbounds.field import QQ, ModInt, PrimeField


def test_qq_basic():
    assert QQ(1, 2) + QQ(1, 3) == QQ(5, 6)
    assert QQ(2, 4) == QQ(1, 2)
    assert QQ(7) / QQ(3) == QQ(7, 3)
    assert QQ(-1, 2) < 0


def test_qq_roundtrip_256bit():
    """(a+b)-b == a for rationals with 256-bit numerators/denominators."""
    rng = random.Random(0)
    for _ in range(50):
        a = QQ(rng.getrandbits(256) - 2**255, rng.getrandbits(256) + 1)
        b = QQ(rng.getrandbits(256) - 2**255, rng.getrandbits(256) + 1)
        assert (a + b) - b == a
        if b != 0:
            assert (a * b) / b == a


def test_prime_field():
    F = PrimeField(7)
    a = F(3)
    b = F(5)
    assert (a + b) == F(1)
    assert (a * b) == F(1)
    assert a / b == a * F(3)  # 5^-1 = 3 mod 7
    assert F(0) == 0


def test_prime_field_default_prime_class():
    F = PrimeField(2**31 - 1)
    x = F(123456789)
    assert x / x == F(1)


def test_modint_pow_and_neg():
    F = PrimeField(13)
    x = F(2)
    assert x ** 12 == F(1)
    assert -x == F(11)
