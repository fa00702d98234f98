"""Ratliff-Rush closures, rho, depth flags, and v-numbers."""

import random

import pytest

from redbounds.errors import CapExceededError
from redbounds.field import QQ
from redbounds.filtration import (
    FiltrationTable,
    closed_filtration_reduction_number,
    depth_g_positive,
    ratliff_rush_power,
    rho,
    v_numbers,
)
from redbounds.ideal import Ideal
from redbounds.poly import PolyRing
from redbounds.reduction import find_minimal_reduction
from redbounds.ring import RingPresentation


def make(names=("x", "y")):
    amb = PolyRing(QQ, names)
    return RingPresentation(amb, [])


def ideal_of(ring, *texts):
    return Ideal(ring, [ring.ambient.parse(t) for t in texts])


def test_closure_adds_known_element():
    # the closure of (x^4, x^3y, xy^3, y^4) picks up x^2y^2
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    res = ratliff_rush_power(I, 1)
    assert res.certified
    probe = R.ambient.parse("x^2*y^2")
    assert res.ideal.contains(probe)
    assert not I.contains(probe)


def test_closure_of_parameter_ideal_is_trivial():
    R = make()
    I = ideal_of(R, "x^3", "y^3")
    for n in (1, 2, 3):
        res = ratliff_rush_power(I, n)
        assert res.certified
        assert res.ideal.equal(I.power(n))


def test_closure_is_idempotent_upward():
    # closure(I) has the same powers as I eventually: same closure of I^2
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    c1 = ratliff_rush_power(I, 1).ideal
    c2a = ratliff_rush_power(I, 2).ideal
    c2b = ratliff_rush_power(c1, 2).ideal
    assert c2a.length() == c2b.length()


def test_rho_known_example():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    assert rho(I, horizon=6) == 2


def test_rho_one_for_closed_ideal():
    R = make()
    assert rho(ideal_of(R, "x^2", "y^5"), horizon=5) == 1


def test_depth_g_positive():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    assert not depth_g_positive(I, t=1, horizon=6)
    assert depth_g_positive(ideal_of(R, "x^2", "x*y", "y^2"), t=1, horizon=5)


def test_table_extend_matches_fresh():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    grown = FiltrationTable(I, 3)
    grown.extend(6)
    fresh = FiltrationTable(I, 6)
    assert grown.equals_power == fresh.equals_power
    assert grown.rho() == fresh.rho()
    for n in range(1, 7):
        assert grown.closure(n).length() == fresh.closure(n).length()


def test_v_numbers_sum_to_e1():
    # e_1 = sum of v_n, e_2 = sum of n*v_n for the closed filtration
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    J = ideal_of(R, "x^4", "y^4")
    v = v_numbers(I, J, horizon=7)
    assert sum(v) == 6
    # e_2 = 0 here: everything is concentrated in v_0
    assert sum(n * vn for n, vn in enumerate(v)) == 0
    assert v[0] == 6
    assert all(x == 0 for x in v[1:])


def test_rtilde_at_most_r():
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    J = ideal_of(R, "x^4", "y^4")
    rt = closed_filtration_reduction_number(I, J, horizon=7)
    # r_J(I) = 2 but the closed filtration settles immediately
    assert rt == 1


def test_rtilde_cap_when_window_dirty():
    # a horizon too small to exhibit the trailing zero window must raise,
    # not return a guess
    R = make()
    I = ideal_of(R, "x^4", "x^3*y", "x*y^3", "y^4")
    J = ideal_of(R, "x^4", "y^4")
    with pytest.raises(CapExceededError):
        closed_filtration_reduction_number(I, J, horizon=3)


def test_random_v_numbers_nonnegative():
    rng = random.Random(9)
    R = make()
    for _ in range(5):
        gens = ["x^%d" % rng.randint(2, 4), "y^%d" % rng.randint(2, 4),
                "x^%d*y^%d" % (rng.randint(1, 2), rng.randint(1, 2))]
        I = ideal_of(R, *gens)
        cert = find_minimal_reduction(I, rng, dimension=2)
        v = v_numbers(I, cert.reduction, horizon=6)
        assert all(x >= 0 for x in v)
