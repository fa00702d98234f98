"""End-to-end analysis of one ideal specification: parse, dimension,
Hilbert coefficients, reduction data, Ratliff-Rush filtration, bound
catalog, and the JSON report.

A specification is a JSON (or TOML) document:

    {
      "id": "optional name",
      "field": "Q" | {"Fp": prime},
      "vars": ["x", "y"],
      "relations": ["..."],          # optional, defining the local ring
      "generators": ["..."],         # the ideal I
      "reduction": ["..."],          # optional candidate J
      "asserted_properties": {"cohen_macaulay": true, "buchsbaum": false},
      "expect": {"e": [16, 6, 0], "r": 2, ...}
    }

All integers in emitted reports are decimal strings, so readers never
face 64-bit truncation.  Reports are deterministic: same spec, seed and
version give byte-identical output (timing information goes to the log,
never into the report).
"""

import json
import random

from . import __version__
from .bounds import (
    InvariantBundle,
    check_thm22_equivalences,
    evaluate_bounds,
)
from .errors import CapExceededError, ParseError, RedboundsError
from .field import QQ, PrimeField
from .filtration import (
    TRAILING_WINDOW,
    FiltrationTable,
    rtilde,
    v_numbers,
)
from .hilbert import (
    cohen_macaulay_type,
    embedding_dimension,
    hilbert_coefficients,
    krull_dimension,
)
from .ideal import Ideal
from .poly import PolyRing
from .reduction import find_minimal_reduction, is_reduction_with_number
from .ring import RingPresentation

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_UNCERTIFIED = 3
EXIT_VIOLATION = 4


class IdealSpec:
    """Validated ideal specification."""

    def __init__(self, raw):
        self.raw = dict(raw)
        self.id = raw.get("id")
        self.field = _parse_field(raw.get("field", "Q"))
        names = raw.get("vars")
        if not names:
            raise ValueError("spec needs a non-empty 'vars' list")
        self.ambient = PolyRing(self.field, names)
        self.relations = [self.ambient.parse(s) for s in raw.get("relations", [])]
        gens = raw.get("generators")
        if not gens:
            raise ValueError("spec needs a non-empty 'generators' list")
        self.generators = [self.ambient.parse(s) for s in gens]
        self.reduction = [self.ambient.parse(s) for s in raw.get("reduction", [])]
        self.asserted = dict(raw.get("asserted_properties", {}))
        self.expect = dict(raw.get("expect", {}))

    @classmethod
    def from_file(cls, path):
        text = open(path, "rb").read()
        if path.endswith(".toml"):
            import tomllib

            return cls(tomllib.loads(text.decode()))
        return cls(json.loads(text))


def _parse_field(value):
    if value == "Q":
        return QQ
    if isinstance(value, dict) and "Fp" in value:
        return PrimeField(int(value["Fp"]))
    if isinstance(value, str) and value.startswith("Fp:"):
        return PrimeField(int(value.split(":", 1)[1]))
    raise ValueError("unrecognized field spec %r" % (value,))


class Report:
    def __init__(self, payload, exit_code):
        self.payload = payload
        self.exit_code = exit_code

    def to_json(self):
        return json.dumps(_stringify_ints(self.payload), sort_keys=True, indent=2)


def _stringify_ints(obj):
    """Integers become decimal strings everywhere (bools stay bools)."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify_ints(v) for v in obj]
    return obj


def default_horizon(r, dimension, e2):
    """Large enough to certify rho (r+2) and, in dimension 2, rtilde:
    rtilde is at most min(r, e2+1), and its trailing all-zero window of
    v-numbers needs TRAILING_WINDOW slots past that."""
    wanted = [r + 2, TRAILING_WINDOW + 1]
    if dimension == 2:
        wanted.append(e2 + 2)
        wanted.append(min(r, e2 + 1) + TRAILING_WINDOW)
    return max(wanted)


def analyze(spec, seed=0, cap=None, horizon=None, max_power=40):
    """Run the full pipeline on a spec; returns a Report.

    Every derived quantity carries a certification flag; the exit code
    encodes the worst finding (mismatch > uncertified > ok), with a
    dedicated code for a verified counterexample to a catalog bound.
    """
    certified = {}
    stages = {}

    ring = RingPresentation(spec.ambient, spec.relations)
    ideal = Ideal(ring, spec.generators)
    if ideal.is_unit():
        raise ValueError("the specified ideal is the unit ideal")

    d = krull_dimension(ring)
    stages["dimension"] = d

    hd = hilbert_coefficients(ideal, dimension=d, max_power=max_power)
    certified["e"] = hd.certified
    stages["hilbert"] = {
        "coefficients": list(hd.coefficients),
        "postulation": hd.postulation,
        "values": {str(n): hd.values[n] for n in sorted(hd.values)},
        "certified": hd.certified,
    }

    colength = ideal.length()
    order = ideal.order_in_m()
    # locally, a proper ideal is the maximal ideal exactly when lambda = 1
    is_max = colength == 1
    mu = ideal.minimal_generator_count()

    rng = random.Random(seed)
    if spec.reduction:
        J = Ideal(ring, spec.reduction)
        cert = is_reduction_with_number(ideal, J, cap=cap)
        if cert is None:
            raise RedboundsError("declared reduction was not verified within cap")
        reduction_source = "declared"
    else:
        cert = find_minimal_reduction(ideal, rng, dimension=d, cap=cap)
        reduction_source = "searched(seed=%d)" % seed
    J = cert.reduction
    certified["r"] = True
    stages["reduction"] = {
        "generators": [str(g) for g in J.gens],
        "source": reduction_source,
        "r": cert.r,
        "confirmed_powers": list(cert.confirmed_powers),
    }

    auto_horizon = horizon is None
    if auto_horizon:
        horizon = default_horizon(cert.r, d, hd.coefficients[2] if d >= 2 else 0)
    table = FiltrationTable(ideal, horizon)
    if auto_horizon:
        # rho can land near the edge of the default window; grow until the
        # trailing equalities certify it (bounded, so termination is sure)
        limit = horizon + 8
        while table.certified and not table.rho_is_stable() and horizon < limit:
            horizon += 1
            table.extend(horizon)
    rho_value = table.rho()
    rho_certified = table.certified and table.rho_is_stable() and \
        horizon >= cert.r + 2
    certified["rho"] = rho_certified
    depth_flags = {}
    for t in range(1, horizon + 1):
        multiples = list(range(t, horizon + 1, t))
        if not multiples:
            continue
        verdict = all(table.equals_power[k] for k in multiples)
        # a positive verdict is only certified when rho is: the closed
        # pattern must be known to persist
        if verdict and not rho_certified:
            continue
        if not verdict or rho_value <= max(multiples):
            depth_flags[t] = verdict
    stages["filtration"] = {
        "horizon": horizon,
        "closed": {str(n): table.equals_power[n] for n in range(1, horizon + 1)},
        "rho": rho_value,
        "rho_certified": rho_certified,
        "closure_colengths": {
            str(n): table.closure(n).length() for n in range(1, horizon + 1)
        },
    }

    rtilde_value = None
    v = None
    closure_colength = table.closure(1).length()
    if d == 2:
        v = v_numbers(ideal, J, horizon, table=table)
        rtilde_value = rtilde(ideal, J, horizon, table=table)
        certified["rtilde"] = table.certified and horizon >= hd.coefficients[2] + 2
        certified["v"] = table.certified
        stages["filtration"]["v"] = list(v)
        stages["filtration"]["rtilde"] = rtilde_value

    cm_type = None
    if spec.asserted.get("cohen_macaulay") and is_max:
        cm_type = cohen_macaulay_type(ring, J.gens)

    bundle = InvariantBundle(
        dimension=d,
        e=hd.coefficients,
        colength=colength,
        order=order,
        r=cert.r,
        rtilde=rtilde_value,
        rho=rho_value,
        depth_positive=depth_flags,
        cm_type=cm_type,
        mu=embedding_dimension(ring) if is_max else mu,
        v=v,
        closure_colength=closure_colength,
        is_maximal_ideal=is_max,
        asserted=spec.asserted,
        certified=certified,
    )
    report = evaluate_bounds(bundle)
    stages["bounds"] = [c.as_dict() for c in report.checks]

    if d == 2:
        verdict = check_thm22_equivalences(bundle)
        stages["thm22"] = {
            "conditions": dict(verdict.conditions),
            "consistent": verdict.consistent,
            "note": verdict.note,
        }

    computed = {
        "dimension": d,
        "e": list(hd.coefficients),
        "colength": colength,
        "order": order,
        "mu": bundle.mu,
        "r": cert.r,
        "rho": rho_value,
        "rtilde": rtilde_value,
        "cm_type": cm_type,
        "closure_colength": closure_colength,
    }
    if "normal_e" in spec.expect and ideal.is_monomial_ideal:
        from .oracles import normal_hilbert_coefficients

        computed["normal_e"] = list(normal_hilbert_coefficients(ideal, d))
    mismatches = _check_expectations(spec.expect, computed, bundle)

    payload = {
        "version": __version__,
        "spec": spec.raw,
        "seed": seed,
        "stages": stages,
        "computed": computed,
        "mismatches": mismatches,
        "certified": certified,
    }

    violations = [c.bound_id for c in report.violations()
                  if all(v == "verified" for v in c.hypotheses.values())]
    payload["violations"] = violations
    if violations:
        code = EXIT_VIOLATION
    elif mismatches:
        code = EXIT_MISMATCH
    elif not all(certified.values()):
        code = EXIT_UNCERTIFIED
    else:
        code = EXIT_OK
    return Report(payload, code)


def _check_expectations(expect, computed, bundle):
    mismatches = []
    for key, want in expect.items():
        if key == "e":
            got = computed["e"]
            want_list = list(want)
            # trailing zero coefficients may be omitted in expectations
            got_trim = got[: len(want_list)]
            ok = got_trim == want_list and all(x == 0 for x in got[len(want_list):])
        elif key == "rtilde_less_than_r":
            ok = (computed["rtilde"] is not None
                  and (computed["rtilde"] < computed["r"]) == want)
            got = computed["rtilde"]
        elif key == "thm22_iv_holds":
            got = (bundle.ei(1) == bundle.ei(0) - bundle.closure_colength + 1)
            ok = got == want
        elif key in computed:
            got = computed[key]
            ok = got == want
        else:
            got = None
            ok = False
        if not ok:
            mismatches.append({"key": key, "expected": want, "computed": got})
    return mismatches
