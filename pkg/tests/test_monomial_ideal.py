"""Combinatorial staircase arithmetic for monomial ideals."""

from redbounds import monomial_ideal as mono


def test_minimalize():
    exps = [(2, 0), (0, 3), (2, 1), (4, 4)]
    assert sorted(mono.minimalize(exps)) == [(0, 3), (2, 0)]


def test_contains():
    gens = [(2, 0), (0, 3)]
    assert mono.contains(gens, (5, 1))
    assert not mono.contains(gens, (1, 2))


def test_product_and_power():
    a = [(1, 0), (0, 1)]
    prod = mono.product(a, a)
    assert sorted(prod) == [(0, 2), (1, 1), (2, 0)]
    assert sorted(mono.power(a, 3)) == [(0, 3), (1, 2), (2, 1), (3, 0)]


def test_intersect():
    met = mono.intersect([(2, 0)], [(0, 3)])
    assert sorted(met) == [(2, 3)]


def test_colon():
    # (x^4, y^4) : (x, y) = (x^4, y^4, x^3*y^3)
    got = mono.colon([(4, 0), (0, 4)], [(1, 0), (0, 1)])
    assert mono.contains(got, (3, 3))
    assert not mono.contains(got, (3, 0))
    assert not mono.contains(got, (3, 2))


def test_colon_single():
    # (x^4, y^4) : x = (x^3, y^4)
    got = mono.colon([(4, 0), (0, 4)], [(1, 0)])
    assert sorted(mono.minimalize(got)) == [(0, 4), (3, 0)]


def test_zero_dimensional():
    assert mono.is_zero_dimensional([(2, 0), (0, 3)], 2)
    assert not mono.is_zero_dimensional([(2, 0)], 2)
    assert not mono.is_zero_dimensional([(1, 1)], 2)


def test_pure_power_bounds():
    assert tuple(mono.pure_power_bounds([(2, 0), (0, 3), (1, 1)], 2)) == (2, 3)


def test_standard_monomials_box():
    # complete intersection (x^2, y^3): standard monomials form a 2x3 box
    std = mono.standard_monomials([(2, 0), (0, 3)], 2)
    assert len(std) == 6
    assert set(std) == {(i, j) for i in range(2) for j in range(3)}
    assert mono.count_standard_monomials([(2, 0), (0, 3)], 2) == 6


def test_count_with_overlap():
    # (x^4, x^3 y, x y^3, y^4): colength 11
    lts = [(4, 0), (3, 1), (1, 3), (0, 4)]
    assert mono.count_standard_monomials(lts, 2) == 11
