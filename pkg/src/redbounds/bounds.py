"""The catalog of reduction-number bounds, evaluated against a computed
invariant bundle.

Every bound in the catalog is reported on every run: either evaluated
(with per-hypothesis status: verified, user-asserted, or unknown) or
explicitly marked inapplicable with a reason.  A bound's `holds` verdict
is asserted only when it is applicable and both sides are certified.
Right-hand sides are pure integer arithmetic over the bundle, so
re-evaluation is deterministic and total.
"""

VERIFIED = "verified"
USER_ASSERTED = "user-asserted"
UNKNOWN = "unknown"

CATALOG_IDS = ("B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10",
               "eq4.2")


class InvariantBundle:
    """Immutable snapshot of everything the bound catalog consumes.

    Numeric fields may be None when not computed; `certified` maps field
    names to booleans and is consulted before any `holds` verdict.
    """

    def __init__(self, dimension, e, colength, order, r=None, rtilde=None,
                 rho=None, depth_positive=None, cm_type=None, mu=None,
                 reduction_e=None, v=None, closure_colength=None,
                 is_maximal_ideal=False, asserted=None, certified=None):
        self.dimension = dimension
        self.e = tuple(e)
        self.colength = colength
        self.order = order
        self.r = r
        self.rtilde = rtilde
        self.rho = rho
        # {t: bool} — certified verdicts for depth G(I^t) > 0
        self.depth_positive = dict(depth_positive or {})
        self.cm_type = cm_type
        self.mu = mu
        self.reduction_e = tuple(reduction_e) if reduction_e else None
        self.v = tuple(v) if v is not None else None
        self.closure_colength = closure_colength
        self.is_maximal_ideal = is_maximal_ideal
        # {"cohen_macaulay": bool, "buchsbaum": bool} — user assertions
        self.asserted = dict(asserted or {})
        self.certified = dict(certified or {})

    def is_certified(self, *fields):
        return all(self.certified.get(f, False) for f in fields)

    def ei(self, i):
        return self.e[i] if i < len(self.e) else 0


class BoundCheck:
    def __init__(self, bound_id, applicable, hypotheses, lhs=None, rhs=None,
                 holds=None, reason=None):
        self.bound_id = bound_id
        self.applicable = applicable
        self.hypotheses = dict(hypotheses)
        self.lhs = lhs
        self.rhs = rhs
        self.holds = holds
        self.reason = reason

    def as_dict(self):
        return {
            "id": self.bound_id,
            "applicable": self.applicable,
            "hypotheses": dict(self.hypotheses),
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "holds": self.holds,
            "reason": self.reason,
        }

    def __repr__(self):
        return "BoundCheck(%s, rhs=%s, holds=%s)" % (
            self.bound_id, self.rhs, self.holds
        )


class BoundReport:
    def __init__(self, bundle, checks):
        self.bundle = bundle
        self.checks = list(checks)

    def get(self, bound_id):
        for c in self.checks:
            if c.bound_id == bound_id:
                return c
        raise KeyError(bound_id)

    def violations(self):
        return [c for c in self.checks if c.holds is False]


def _na(bound_id, reason, hypotheses=None):
    return BoundCheck(bound_id, False, hypotheses or {}, reason=reason)


def _verdict(bound_id, hypotheses, lhs, rhs, lhs_certified):
    holds = (lhs <= rhs) if lhs_certified else None
    return BoundCheck(bound_id, True, hypotheses, lhs=lhs, rhs=rhs, holds=holds)


def depth_positive_t(bundle):
    """The least t with depth G(I^t) > 0 certified, or None."""
    good = [t for t, ok in sorted(bundle.depth_positive.items()) if ok]
    return good[0] if good else None


def modt_refinement_rhs(bundle, t):
    """If r = k mod t with 1 <= k <= t-1 and depth G(I^t) > 0, the bound
    sharpens to e1 - e0 + colength + k; returns None when k = 0."""
    k = bundle.r % t
    if k == 0:
        return None
    return bundle.ei(1) - bundle.ei(0) + bundle.colength + k


def evaluate_bounds(bundle):
    d = bundle.dimension
    e0, e1 = bundle.ei(0), bundle.ei(1)
    e2, e3 = bundle.ei(2), bundle.ei(3)
    lam = bundle.colength
    r = bundle.r
    r_cert = bundle.is_certified("r")
    e_cert = bundle.is_certified("e")
    checks = []

    # B1: d*e0/o(I) - 2d + 1, needs Cohen-Macaulay
    hyp = {"cohen_macaulay": USER_ASSERTED if bundle.asserted.get("cohen_macaulay")
           else UNKNOWN}
    if bundle.order is None or not e_cert:
        checks.append(_na("B1", "order or multiplicity unavailable", hyp))
    else:
        rhs = (d * e0) // bundle.order - 2 * d + 1
        checks.append(_verdict("B1", hyp, r, rhs,
                               r_cert and hyp["cohen_macaulay"] != UNKNOWN))

    # B2: e1 - e0 + colength + 1
    if not e_cert or r is None:
        checks.append(_na("B2", "coefficients or r unavailable"))
    else:
        rhs = e1 - e0 + lam + 1
        if d <= 2:
            hyp = {"dimension<=2": VERIFIED}
            checks.append(_verdict("B2", hyp, r, rhs, r_cert))
        elif d == 3 and bundle.rho is not None and bundle.is_certified("rho") \
                and bundle.rho <= r - 1:
            hyp = {"rho<=r-1": VERIFIED}
            checks.append(_verdict("B2", hyp, r, rhs, r_cert))
        elif d == 3 and e2 == 0 and e3 == 0:
            hyp = {"e2=e3=0": VERIFIED}
            checks.append(_verdict("B2", hyp, r, rhs, r_cert))
        else:
            checks.append(_na("B2", "no verified applicability route in "
                                    "dimension %d" % d))

    # B3: dimension 3, e1 - e0 + colength + t for the least certified t
    # with depth G(I^t) > 0 (t = rho always works)
    if d != 3:
        checks.append(_na("B3", "dimension-3 bound"))
    elif not e_cert or r is None:
        checks.append(_na("B3", "coefficients or r unavailable"))
    else:
        t = depth_positive_t(bundle)
        if t is None and bundle.rho is not None and bundle.is_certified("rho"):
            t = bundle.rho
        if t is None:
            checks.append(_na("B3", "no certified depth-positive power"))
        else:
            hyp = {"depth G(I^%d)>0" % t: VERIFIED}
            rhs = e1 - e0 + lam + t
            refined = modt_refinement_rhs(bundle, t) if r is not None else None
            if refined is not None:
                rhs = min(rhs, refined)
                hyp["r mod t refinement"] = VERIFIED
            checks.append(_verdict("B3", hyp, r, rhs, r_cert))

    # B4: depth G(I^2) > 0 and r odd: e1 - e0 + colength + 1
    if d != 3:
        checks.append(_na("B4", "dimension-3 bound"))
    elif not bundle.depth_positive.get(2):
        checks.append(_na("B4", "depth G(I^2) > 0 not certified"))
    elif r is None or r % 2 == 0:
        checks.append(_na("B4", "reduction number not odd"))
    else:
        hyp = {"depth G(I^2)>0": VERIFIED, "r odd": VERIFIED}
        checks.append(_verdict("B4", hyp, r, e1 - e0 + lam + 1, r_cert))

    # B5: e1 - e0 + colength + 1 + (e2 - 1)e2 - e3, depth G(I) >= d-3
    if d < 3:
        checks.append(_na("B5", "needs dimension >= 3"))
    elif not e_cert or r is None:
        checks.append(_na("B5", "coefficients or r unavailable"))
    else:
        if d == 3:
            hyp = {"depth G(I)>=d-3": VERIFIED}  # vacuous in dimension 3
            ok = True
        else:
            ok = bool(bundle.depth_positive.get(1))
            hyp = {"depth G(I)>=d-3": VERIFIED if ok else UNKNOWN}
        rhs = e1 - e0 + lam + 1 + (e2 - 1) * e2 - e3
        checks.append(_verdict("B5", hyp, r, rhs, r_cert and ok))

    # B6: small e2 refinements of the dimension-3 bound
    if d != 3 or not e_cert or r is None:
        checks.append(_na("B6", "needs dimension 3 with certified data"))
    elif e2 in (0, 1):
        hyp = {"e2 in {0,1}": VERIFIED}
        checks.append(_verdict("B6", hyp, r, e1 - e0 + lam + 1 - e3, r_cert))
    elif e2 == 2:
        hyp = {"e2 = 2": VERIFIED}
        checks.append(_verdict("B6", hyp, r, e1 - e0 + lam + 2 - e3, r_cert))
    else:
        checks.append(_na("B6", "e2 = %d too large" % e2))

    # B7: rtilde <= e2 + 1 in dimension 2
    if d != 2 or bundle.rtilde is None:
        checks.append(_na("B7", "needs dimension 2 with computed rtilde"))
    else:
        hyp = {"dimension=2": VERIFIED}
        checks.append(_verdict("B7", hyp, bundle.rtilde, e2 + 1,
                               bundle.is_certified("rtilde") and e_cert))

    # B8: rtilde <= r in dimension 2
    if d != 2 or bundle.rtilde is None or r is None:
        checks.append(_na("B8", "needs dimension 2 with rtilde and r"))
    else:
        hyp = {"dimension=2": VERIFIED}
        checks.append(_verdict("B8", hyp, bundle.rtilde, r,
                               bundle.is_certified("rtilde") and r_cert))

    # B9: Buchsbaum bounds using e1 of the reduction
    hyp = {"buchsbaum": USER_ASSERTED if bundle.asserted.get("buchsbaum")
           else UNKNOWN}
    if bundle.reduction_e is None or len(bundle.reduction_e) < 2 or r is None:
        checks.append(_na("B9", "e1 of the reduction unavailable", hyp))
    elif d == 1:
        rhs = e1 - bundle.reduction_e[1] - e0 + lam + 2
        checks.append(_verdict("B9", hyp, r, rhs,
                               r_cert and hyp["buchsbaum"] != UNKNOWN))
    elif d == 2:
        t = depth_positive_t(bundle) or bundle.rho
        if t is None:
            checks.append(_na("B9", "no certified depth-positive power", hyp))
        else:
            rhs = e1 - bundle.reduction_e[1] - e0 + lam + t + 1
            checks.append(_verdict("B9", hyp, r, rhs,
                                   r_cert and hyp["buchsbaum"] != UNKNOWN))
    else:
        checks.append(_na("B9", "stated for dimensions 1 and 2", hyp))

    # B10: boundary case for the maximal ideal:
    # e2 = e1 - e0 + 1 != 0 and type = e0 - mu + d force r <= e1 - e0 + lam + 3
    if not bundle.is_maximal_ideal:
        checks.append(_na("B10", "only for the maximal ideal"))
    elif bundle.cm_type is None or bundle.mu is None or not e_cert or r is None:
        checks.append(_na("B10", "type or mu unavailable"))
    elif e2 == e1 - e0 + 1 and e2 != 0 and bundle.cm_type == e0 - bundle.mu + d:
        hyp = {"e2 = e1-e0+1 != 0": VERIFIED,
               "type = e0-mu+d": VERIFIED}
        checks.append(_verdict("B10", hyp, r, e1 - e0 + lam + 3, r_cert))
    else:
        checks.append(_na("B10", "numeric hypotheses not satisfied"))

    # eq4.2 diagnostic: r <= sum(v_n) - e0 + colength + 1 (dimension 2)
    if d != 2 or bundle.v is None or r is None:
        checks.append(_na("eq4.2", "needs dimension-2 v-numbers"))
    else:
        hyp = {"dimension=2": VERIFIED}
        rhs = sum(bundle.v) - e0 + lam + 1
        checks.append(_verdict("eq4.2", hyp, r, rhs,
                               r_cert and bundle.is_certified("v")))

    assert [c.bound_id for c in checks] == list(CATALOG_IDS)
    return BoundReport(bundle, checks)


class EquivalenceVerdict:
    """The four equivalent conditions for dimension-2 filtrations, plus
    the implication checks among them."""

    def __init__(self, conditions, consistent, note=None):
        self.conditions = dict(conditions)
        self.consistent = consistent
        self.note = note

    def __repr__(self):
        return "EquivalenceVerdict(%s, consistent=%s)" % (
            self.conditions, self.consistent
        )


def check_thm22_equivalences(bundle):
    """Evaluate, on a dimension-2 bundle with v-numbers and the closure
    colength, the four conditions

      (i)   rtilde = e2 + 1
      (ii)  v_n = 0 for every n outside {0, e2}
      (iii) v_{e2} = 1
      (iv)  e1 = e0 - colength(R/closure(I)) + 1

    and assert the implication lattice (iv) => (iii) => (i) <=> (ii),
    upgraded to full equivalence when e2 != 0.  A violated implication is
    a hard failure: the underlying theorem is unconditional.
    """
    if bundle.dimension != 2:
        return EquivalenceVerdict({}, None, note="insufficient data: not dimension 2")
    if bundle.v is None or bundle.rtilde is None or bundle.closure_colength is None:
        return EquivalenceVerdict({}, None, note="insufficient data")
    if not (bundle.is_certified("v") and bundle.is_certified("rtilde")):
        return EquivalenceVerdict({}, None, note="insufficient data: uncertified")
    if bundle.rtilde == 0:
        # closure(I) = J forces I = J, excluded by the theorem's standing
        # assumption
        return EquivalenceVerdict({}, None, note="I equals its reduction")
    e0, e1, e2 = bundle.ei(0), bundle.ei(1), bundle.ei(2)
    v = bundle.v
    c1 = bundle.rtilde == e2 + 1
    c2 = all(vn == 0 for n, vn in enumerate(v) if n not in (0, e2))
    c3 = (v[e2] if e2 < len(v) else 0) == 1
    c4 = e1 == e0 - bundle.closure_colength + 1
    conditions = {"i": c1, "ii": c2, "iii": c3, "iv": c4}
    ok = True
    if c4 and not c3:
        ok = False
    if c3 and not c1:
        ok = False
    if c1 != c2:
        ok = False
    if e2 != 0 and len({c1, c2, c3, c4}) > 1:
        ok = False
    if not ok:
        raise RuntimeError(
            "equivalence lattice violated: %s — this is a hard failure, the "
            "conditions are provably equivalent" % conditions
        )
    return EquivalenceVerdict(conditions, True)
