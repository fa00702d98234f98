"""Cross-check routines: truncation lengths, closure via a reduction,
and integral-closure (normal) coefficients."""

import random

from redbounds.field import QQ
from redbounds.filtration import ratliff_rush_power
from redbounds.ideal import Ideal
from redbounds.oracles import (
    length_by_truncation,
    membership_by_normal_form,
    monomial_in_integral_closure,
    normal_hilbert_coefficients,
    ratliff_rush_via_reduction,
)
from redbounds.poly import PolyRing
from redbounds.reduction import find_minimal_reduction
from redbounds.ring import RingPresentation


def make(names=("x", "y")):
    amb = PolyRing(QQ, names)
    return RingPresentation(amb, [])


def ideal_of(ring, *texts):
    return Ideal(ring, [ring.ambient.parse(t) for t in texts])


def test_truncation_length_monomial():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    assert length_by_truncation(I) == 11 == I.length()


def test_truncation_length_nonhomogeneous():
    # the affine staircase count is 57 here; the local length is 18
    R = make(("x", "y", "z"))
    I = ideal_of(
        R,
        "x^2 + 2*y^3 - z^3 + x*z^2",
        "x^2 - y^3 + 3*z^3 - 2*x^2*y^3*z^3",
        "2*x^2 + y^3 + z^3 + x*z^2",
    )
    assert length_by_truncation(I) == 18 == I.length()


def test_truncation_length_with_relations():
    R = make(("x", "y"))
    amb = R.ambient
    ring = RingPresentation(amb, [amb.parse("x^2 - y^3")])
    I = Ideal(ring, [amb.parse("x"), amb.parse("y^2")])
    assert length_by_truncation(I) == I.length()


def test_closure_via_reduction_agrees_with_chain():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    J = ideal_of(R, "x^4", "y^4")
    for n in (1, 2):
        chain = ratliff_rush_power(I, n)
        assert chain.certified
        alt = ratliff_rush_via_reduction(I, n, J)
        assert alt.length() == chain.ideal.length()
        assert alt.locally_contains_ideal(chain.ideal)


def test_closure_via_searched_reduction():
    rng = random.Random(2)
    R = make()
    I = ideal_of(R, "x^3", "x*y^2", "y^4")
    cert = find_minimal_reduction(I, rng, dimension=2)
    alt = ratliff_rush_via_reduction(I, 1, cert.reduction)
    chain = ratliff_rush_power(I, 1)
    assert alt.length() == chain.ideal.length()


def test_integral_closure_membership():
    # closure of (x^2, y^2) contains xy; the ideal itself does not
    gens = [(2, 0), (0, 2)]
    assert monomial_in_integral_closure((1, 1), gens)
    assert not monomial_in_integral_closure((1, 0), gens)
    assert monomial_in_integral_closure((2, 3), gens, n=2)
    assert not monomial_in_integral_closure((1, 2), gens, n=2)


def test_normal_coefficients_parameter_ideal():
    # (x^a, y^b) is normal up to closure: ebar_0 = a*b
    R = make()
    got = normal_hilbert_coefficients(ideal_of(R, "x^2", "y^2"), 2)
    assert got[0] == 4


def test_normal_coefficients_known():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    got = normal_hilbert_coefficients(I, 2)
    # the closure of I^n is (x, y)^{4n}: the filtration of m^4
    assert got == (16, 6, 0)


def test_membership_by_normal_form():
    R = make()
    f = R.ambient.parse("x^3*y + y^5")
    gens = [R.ambient.parse("x^3"), R.ambient.parse("y^5")]
    assert membership_by_normal_form(f, gens)
    assert not membership_by_normal_form(R.ambient.parse("x^2*y^4"), gens)
