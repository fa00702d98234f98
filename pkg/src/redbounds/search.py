"""Deterministic randomized search for counterexample candidates to the
catalog bounds on random m-primary monomial ideals.

Each trial draws pure powers x_i^{a_i} (forcing m-primariness) plus a few
extra monomials, runs the full analysis pipeline, and inspects the bound
checks.  Violations of bounds whose hypotheses are verified would be
research events; they are logged verbatim with a REPLAY: line carrying a
self-contained spec, never asserted impossible.  Near-equalities
(rhs - lhs <= 1) are logged too, as the interesting boundary cases.
"""

import json
import random

from .analyze import IdealSpec, analyze
from .errors import CapExceededError, RedboundsError

WATCHED_BOUNDS = ("B2", "B3", "B5", "B7", "B8")


class SearchConfig:
    def __init__(self, seed=0, trials=20, nvars=3, max_degree=4,
                 min_extra_gens=1, max_extra_gens=4, cap=None, horizon=None):
        if nvars not in (2, 3):
            raise ValueError("search supports 2 or 3 variables")
        if trials < 0 or max_degree < 1 or min_extra_gens < 0 \
                or max_extra_gens < min_extra_gens:
            raise ValueError("bad search configuration")
        self.seed = seed
        self.trials = trials
        self.nvars = nvars
        self.max_degree = max_degree
        self.min_extra_gens = min_extra_gens
        self.max_extra_gens = max_extra_gens
        self.cap = cap
        self.horizon = horizon


VAR_NAMES = ("x", "y", "z")


def random_ideal_spec(rng, config):
    """A random m-primary monomial ideal as a spec dict."""
    names = VAR_NAMES[: config.nvars]
    gens = []
    for name in names:
        gens.append("%s^%d" % (name, rng.randint(1, config.max_degree)))
    extra = rng.randint(config.min_extra_gens, config.max_extra_gens)
    for _ in range(extra):
        # total degree bounded by max_degree
        total = rng.randint(1, config.max_degree)
        exps = [0] * len(names)
        for _ in range(total):
            exps[rng.randrange(len(names))] += 1
        parts = ["%s^%d" % (n, e) for n, e in zip(names, exps) if e > 0]
        gens.append("*".join(parts))
    return {"field": "Q", "vars": list(names), "generators": gens}


class Finding:
    def __init__(self, kind, trial, bound_id, lhs, rhs, spec):
        self.kind = kind  # "violation" | "near-equality" | "trial-error"
        self.trial = trial
        self.bound_id = bound_id
        self.lhs = lhs
        self.rhs = rhs
        self.spec = spec

    def lines(self):
        head = "%s trial=%d bound=%s lhs=%s rhs=%s" % (
            self.kind, self.trial, self.bound_id, self.lhs, self.rhs)
        replay = "REPLAY: " + json.dumps(self.spec, sort_keys=True)
        return [head, replay]


def run_search(config, log=None):
    """Runs the configured trials; returns (findings, violation_found).

    Results are reproducible from (seed, config): each trial gets its own
    RNG stream derived from the master seed, and findings are reported in
    trial order.
    """
    findings = []
    violation = False
    master = random.Random(config.seed)
    trial_seeds = [master.randrange(2 ** 32) for _ in range(config.trials)]
    for trial, trial_seed in enumerate(trial_seeds):
        rng = random.Random(trial_seed)
        raw = random_ideal_spec(rng, config)
        try:
            report = analyze(IdealSpec(raw), seed=trial_seed,
                             cap=config.cap, horizon=config.horizon)
        except (CapExceededError, RedboundsError) as exc:
            f = Finding("trial-error", trial, str(exc), None, None, raw)
            findings.append(f)
            _emit(log, f)
            continue
        for check in report.payload["stages"]["bounds"]:
            if check["id"] not in WATCHED_BOUNDS or not check["applicable"]:
                continue
            if check["holds"] is None or check["lhs"] is None:
                continue
            lhs, rhs = int(check["lhs"]), int(check["rhs"])
            if not check["holds"]:
                kind = "violation"
                if all(v == "verified" for v in check["hypotheses"].values()):
                    violation = True
            elif rhs - lhs <= 1:
                kind = "near-equality"
            else:
                continue
            f = Finding(kind, trial, check["id"], lhs, rhs, raw)
            findings.append(f)
            _emit(log, f)
    return findings, violation


def _emit(log, finding):
    if log is not None:
        for line in finding.lines():
            print(line, file=log)
