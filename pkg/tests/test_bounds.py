"""The bound catalog: right-hand-side arithmetic, applicability gating,
and the dimension-2 equivalence lattice."""

import pytest

from redbounds.bounds import (
    CATALOG_IDS,
    InvariantBundle,
    check_thm22_equivalences,
    evaluate_bounds,
    modt_refinement_rhs,
)

ALL_CERT = {"e": True, "r": True, "rho": True, "rtilde": True, "v": True}


def bundle(**kw):
    base = dict(dimension=2, e=(16, 6, 0), colength=11, order=4, r=2,
                certified=dict(ALL_CERT))
    base.update(kw)
    return InvariantBundle(**base)


def report_map(b):
    rep = evaluate_bounds(b)
    return {c.bound_id: c for c in rep.checks}


def test_catalog_is_complete():
    checks = report_map(bundle())
    assert set(checks) == set(CATALOG_IDS)


def test_b1_rhs():
    # d*e0/o - 2d + 1
    b = bundle(asserted={"cohen_macaulay": True})
    c = report_map(b)["B1"]
    assert c.applicable
    assert c.rhs == 2 * 16 // 4 - 4 + 1  # = 5
    assert c.holds is True


def test_b1_needs_cm_assertion():
    c = report_map(bundle())["B1"]
    assert c.holds is None  # evaluated but not asserted without the hypothesis


def test_b2_dimension_two():
    c = report_map(bundle())["B2"]
    assert c.applicable
    assert c.rhs == 6 - 16 + 11 + 1  # = 2
    assert c.holds is True


def test_b2_dimension_three_routes():
    # rho <= r-1 route
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3, rho=2)
    c = report_map(b)["B2"]
    assert c.applicable
    assert c.rhs == 11 - 8 + 1 + 1
    # no route: rho too big, e2 != 0
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3, rho=3)
    assert not report_map(b)["B2"].applicable


def test_b3_with_depth_power():
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3,
               depth_positive={3: True})
    c = report_map(b)["B3"]
    assert c.applicable
    assert c.rhs == 11 - 8 + 1 + 3  # t = 3, no mod-t refinement (3 mod 3 = 0)
    assert c.holds is True


def test_b3_mod_t_refinement():
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=4,
               depth_positive={3: True})
    assert modt_refinement_rhs(b, 3) == 11 - 8 + 1 + 1  # r = 4 = 1 mod 3
    c = report_map(b)["B3"]
    assert c.rhs == 5  # min(7, 5)


def test_b5_rhs():
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3)
    c = report_map(b)["B5"]
    assert c.applicable
    assert c.rhs == 11 - 8 + 1 + 1 + 3 * 4 - 0  # = 17
    assert c.holds is True


def test_b6_branches():
    b = bundle(dimension=3, e=(8, 4, 0, 0), colength=5, order=1, r=2)
    c = report_map(b)["B6"]
    assert c.rhs == 4 - 8 + 5 + 1  # = 2, the e2 = 0 branch
    assert c.holds is True
    b = bundle(dimension=3, e=(8, 4, 2, 0), colength=5, order=1, r=2)
    assert report_map(b)["B6"].rhs == 4 - 8 + 5 + 2
    b = bundle(dimension=3, e=(8, 4, 3, 0), colength=5, order=1, r=2)
    assert not report_map(b)["B6"].applicable


def test_b7_b8():
    b = bundle(e=(16, 6, 1), rtilde=1)
    checks = report_map(b)
    assert checks["B7"].rhs == 2 and checks["B7"].holds is True
    assert checks["B8"].rhs == 2 and checks["B8"].holds is True


def test_b9_dimension_one():
    b = bundle(dimension=1, e=(6, 2), colength=3, order=1, r=2,
               reduction_e=(6, 1), asserted={"buchsbaum": True})
    c = report_map(b)["B9"]
    assert c.applicable
    assert c.rhs == 2 - 1 - 6 + 3 + 2  # = 0, so the fabricated r = 2 fails it
    assert c.holds is False


def test_b9_dimension_two():
    b = bundle(dimension=2, e=(6, 2, 0), colength=3, order=1, r=2,
               reduction_e=(6, 1), rho=1, asserted={"buchsbaum": True})
    c = report_map(b)["B9"]
    assert c.rhs == 2 - 1 - 6 + 3 + 1 + 1


def test_b10_hypotheses():
    # e2 = e1 - e0 + 1 != 0 and type = e0 - mu + d
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3,
               is_maximal_ideal=True, cm_type=4, mu=7)
    c = report_map(b)["B10"]
    assert c.applicable
    assert c.rhs == 11 - 8 + 1 + 3  # = 7
    assert c.holds is True
    b = bundle(dimension=3, e=(8, 11, 4, 0), colength=1, order=1, r=3,
               is_maximal_ideal=True, cm_type=5, mu=7)
    assert not report_map(b)["B10"].applicable


def test_eq42_diagnostic():
    b = bundle(v=(6, 0, 0, 0))
    c = report_map(b)["eq4.2"]
    assert c.rhs == 6 - 16 + 11 + 1  # = 2
    assert c.holds is True


def test_uncertified_lhs_suspends_verdict():
    b = bundle(certified={"e": True, "r": False})
    c = report_map(b)["B2"]
    assert c.applicable
    assert c.holds is None


def test_thm22_equivalences_consistent():
    b = bundle(e=(16, 6, 0), rtilde=1, v=(6, 0, 0), closure_colength=10)
    verdict = check_thm22_equivalences(b)
    assert verdict.consistent
    # e2 = 0: (i) rtilde = 1 holds, (iv) 6 = 16 - 10 + 1 fails is allowed
    assert verdict.conditions["i"] is True


def test_thm22_violation_is_fatal():
    # rtilde = e2+1 but v-numbers spread out: provably impossible
    b = bundle(e=(16, 6, 2), rtilde=3, v=(4, 1, 1, 0), closure_colength=10)
    with pytest.raises(RuntimeError):
        check_thm22_equivalences(b)
