"""Registry of worked-example fixtures shipped with the package.

Each fixture is a JSON ideal specification with its expected invariants
embedded; `run_examples` pushes every one through the full pipeline and
tabulates expected-vs-computed.
"""

import os

from .analyze import EXIT_OK, IdealSpec, analyze

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_ids():
    names = [f[:-5] for f in os.listdir(FIXTURE_DIR) if f.endswith(".json")]
    return sorted(names)


def load_fixture(fixture_id):
    path = os.path.join(FIXTURE_DIR, fixture_id + ".json")
    if not os.path.exists(path):
        raise KeyError("unknown example id %r (have: %s)"
                       % (fixture_id, ", ".join(fixture_ids())))
    return IdealSpec.from_file(path)


def run_examples(filter_id=None, seed=0):
    """Analyze every registry fixture (or the one matching `filter_id`).

    Returns (rows, all_ok); rows carry per-fixture pass/fail with the
    mismatch details.  Individual failures are collected, never fatal.
    """
    ids = fixture_ids()
    if filter_id is not None:
        ids = [i for i in ids if filter_id in i]
    rows = []
    all_ok = True
    for fixture_id in ids:
        spec = load_fixture(fixture_id)
        try:
            report = analyze(spec, seed=seed)
            ok = report.exit_code == EXIT_OK
            rows.append({
                "id": fixture_id,
                "ok": ok,
                "exit_code": report.exit_code,
                "mismatches": report.payload["mismatches"],
                "computed": report.payload["computed"],
            })
        except Exception as exc:  # collected, reported, not fatal mid-run
            ok = False
            rows.append({"id": fixture_id, "ok": False, "error": str(exc)})
        all_ok = all_ok and ok
    return rows, all_ok
