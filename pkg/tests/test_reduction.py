"""Reductions, reduction numbers, and superficial elements."""

import random

import pytest

from redbounds.field import QQ
from redbounds.hilbert import hilbert_coefficients
from redbounds.ideal import Ideal
from redbounds.poly import PolyRing
from redbounds.reduction import (
    find_minimal_reduction,
    find_superficial_element,
    is_reduction_with_number,
)
from redbounds.ring import RingPresentation


def make(names, relations=()):
    amb = PolyRing(QQ, names)
    return RingPresentation(amb, [amb.parse(t) for t in relations])


def ideal_of(ring, *texts):
    return Ideal(ring, [ring.ambient.parse(t) for t in texts])


def test_declared_reduction_known_number():
    R = make(("x", "y"))
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    J = ideal_of(R, "x^4", "y^4")
    cert = is_reduction_with_number(I, J)
    assert cert is not None
    assert cert.r == 2
    assert cert.confirmed_powers == (3, 4)


def test_non_reduction_returns_none():
    R = make(("x", "y"))
    I = ideal_of(R, "x^2", "x*y", "y^2")
    J = ideal_of(R, "x^2")
    assert is_reduction_with_number(I, J, cap=6) is None


def test_reduction_must_be_contained():
    R = make(("x", "y"))
    I = ideal_of(R, "x^2", "y^2")
    with pytest.raises(ValueError):
        is_reduction_with_number(I, ideal_of(R, "x"))


def test_parameter_ideal_reduces_itself():
    R = make(("x", "y"))
    I = ideal_of(R, "x^3", "y^5")
    cert = is_reduction_with_number(I, I)
    assert cert.r == 0


def test_find_minimal_reduction():
    R = make(("x", "y"))
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    cert = find_minimal_reduction(I, random.Random(0), dimension=2)
    assert len(cert.reduction.gens) == 2
    assert cert.r == 2
    # a minimal reduction of I has colength e_0(I)
    assert cert.reduction.length() == 16


def test_find_minimal_reduction_deterministic():
    R = make(("x", "y"))
    I = ideal_of(R, "x^3", "x*y", "y^3")
    a = find_minimal_reduction(I, random.Random(7), dimension=2)
    b = find_minimal_reduction(I, random.Random(7), dimension=2)
    assert a.reduction.equal(b.reduction)
    assert a.r == b.r


def test_dimension_zero_nilpotency():
    R = make(("x", "y"), ["x^2", "x*y", "y^3"])
    I = R.maximal_ideal()
    cert = find_minimal_reduction(I, random.Random(0), dimension=0)
    assert cert.r == 2  # m^3 = 0, m^2 != 0
    assert not cert.reduction.gens


def test_superficial_element_preserves_coefficients():
    R = make(("x", "y"))
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    cert = find_superficial_element(I, random.Random(1), dimension=2)
    assert cert.checked_coefficients == (16, 6)
    qideal = I.in_quotient(cert.quotient_ring)
    got = hilbert_coefficients(qideal, dimension=1)
    assert got.coefficients[:2] == (16, 6)


def test_named_superficial_element():
    # a specific element passes the numerical superficiality check
    R = make(("x", "y"))
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    p = R.ambient.parse("x^4 + y^4")
    qring = R.quotient_by_element(p)
    qideal = I.in_quotient(qring)
    got = hilbert_coefficients(qideal, dimension=1)
    assert got.coefficients[:2] == (16, 6)
