"""Command-line interface.

    redbounds analyze <spec.json> [--report out.json] [--cap N]
                      [--horizon N] [--seed S] [--field Q|Fp:<p>]
                      [--order grevlex|lex] [--max-power N]
    redbounds examples run [--filter id] [--seed S]
    redbounds search [--seed S] [--trials N] [--vars 2|3] [--max-deg D]

Exit codes: 0 all certified and expectations met; 2 expectation mismatch;
3 uncertified results present; 4 verified bound violation (a research
event, not a crash).
"""

import argparse
import json
import sys

from .analyze import (
    EXIT_MISMATCH,
    EXIT_VIOLATION,
    IdealSpec,
    analyze,
)
from .errors import ParseError, RedboundsError
from .search import SearchConfig, run_search


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="redbounds",
        description="Reduction numbers, Hilbert coefficients and "
                    "Ratliff-Rush filtrations of m-primary ideals, "
                    "in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one ideal spec file")
    pa.add_argument("spec", help="path to a JSON or TOML ideal spec")
    pa.add_argument("--report", help="write the JSON report here")
    pa.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    pa.add_argument("--cap", type=int, default=None,
                    help="hard cap for the reduction-number scan")
    pa.add_argument("--horizon", type=int, default=None,
                    help="filtration horizon (default from r and d)")
    pa.add_argument("--seed", type=int, default=0)
    pa.add_argument("--field", default=None,
                    help="override the spec's field: Q or Fp:<prime>")
    pa.add_argument("--max-power", type=int, default=40)

    pe = sub.add_parser("examples", help="run the registry of worked examples")
    pe_sub = pe.add_subparsers(dest="examples_command", required=True)
    per = pe_sub.add_parser("run")
    per.add_argument("--filter", default=None, help="substring id filter")
    per.add_argument("--seed", type=int, default=0)

    ps = sub.add_parser("search", help="randomized counterexample search")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--trials", type=int, default=20)
    ps.add_argument("--vars", type=int, default=3, choices=[2, 3])
    ps.add_argument("--max-deg", type=int, default=4)
    ps.add_argument("--cap", type=int, default=None)
    ps.add_argument("--horizon", type=int, default=None)
    return parser


def _cmd_analyze(args):
    raw = json.loads(open(args.spec, "rb").read().decode()) \
        if not args.spec.endswith(".toml") else None
    if raw is None:
        import tomllib

        raw = tomllib.load(open(args.spec, "rb"))
    if args.field:
        raw["field"] = args.field
    if args.order != "grevlex":
        raw["order"] = args.order
    spec = IdealSpec(raw)
    if args.order == "lex":
        from .orders import LEX
        from .poly import PolyRing

        spec.ambient = PolyRing(spec.field, spec.ambient.variables, LEX)
        spec.relations = [spec.ambient.parse(s) for s in raw.get("relations", [])]
        spec.generators = [spec.ambient.parse(s) for s in raw["generators"]]
        spec.reduction = [spec.ambient.parse(s) for s in raw.get("reduction", [])]
    report = analyze(spec, seed=args.seed, cap=args.cap,
                     horizon=args.horizon, max_power=args.max_power)
    text = report.to_json()
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return report.exit_code


def _cmd_examples(args):
    from .registry import run_examples

    rows, all_ok = run_examples(filter_id=args.filter, seed=args.seed)
    for row in rows:
        status = "pass" if row["ok"] else "FAIL"
        detail = ""
        if not row["ok"]:
            detail = " " + json.dumps(
                row.get("mismatches", row.get("error", "")), default=str)
        print("%-12s %s%s" % (row["id"], status, detail))
    print("%d/%d examples passed" % (sum(r["ok"] for r in rows), len(rows)))
    return 0 if all_ok else EXIT_MISMATCH


def _cmd_search(args):
    config = SearchConfig(seed=args.seed, trials=args.trials, nvars=args.vars,
                          max_degree=args.max_deg, cap=args.cap,
                          horizon=args.horizon)
    findings, violation = run_search(config, log=sys.stdout)
    print("%d findings in %d trials" % (len(findings), config.trials))
    return EXIT_VIOLATION if violation else 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "examples":
            return _cmd_examples(args)
        if args.command == "search":
            return _cmd_search(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 1
    except RedboundsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
