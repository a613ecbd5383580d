"""Command-line front end.

Subcommands: classify, profile, verify, sweep, gap, check.
Exit codes: 0 success/consistent, 2 usage error, 3 discrepancy found.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from ._version import __version__
from .classifier import classify, profile
from .harness import (SweepReport, consistency_check, dump_json, gap_scan,
                      report_envelope, sweep)
from .model import (Condition, Field, ParameterError, SurfaceParams, Verdict,
                    CONDITIONS)
from .search import FaultWitness, NoneFound, SearchBudget, find_fault

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3

_CONDITION_FLAGS = {"a": Condition.WHITNEY_A, "b": Condition.WHITNEY_B,
                    "w": Condition.KUO_VERDIER_W, "L": Condition.MOSTOWSKI_L}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default already exits 2; keep explicit
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _add_params(p: argparse.ArgumentParser):
    for name in "abcd":
        p.add_argument(f"--{name}", type=int, required=True,
                       help=f"exponent {name} (positive integer)")


def _params_from(args) -> SurfaceParams:
    try:
        return SurfaceParams(args.a, args.b, args.c, args.d)
    except ParameterError as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.exit(EXIT_USAGE)


def _field_from(args) -> Field:
    return Field(args.field)


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        sys.stdout.write(dump_json(report_envelope(payload)))
    else:
        sys.stdout.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="strat-regularity",
                  description="Stratification regularity classifier and "
                              "verifier for y^a = z^b x^c + x^d")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="single-tuple diagram verdict")
    _add_params(p)
    p.add_argument("--field", choices=["real", "complex"], required=True)
    p.add_argument("--condition", choices=list(_CONDITION_FLAGS), required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("profile", help="all eight verdicts for one tuple")
    _add_params(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="classify and search for a fault witness")
    _add_params(p)
    p.add_argument("--field", choices=["real", "complex"], required=True)
    p.add_argument("--condition", choices=list(_CONDITION_FLAGS), required=True)
    p.add_argument("--max-height", type=int, default=64)
    p.add_argument("--max-arcs", type=int, default=20000)
    p.add_argument("--time-budget", type=float, default=1.0,
                   help="seconds per tuple-condition (default 1.0)")
    p.add_argument("--truncation", type=int, default=8,
                   help="series window beyond the leading exponent")
    p.add_argument("--precision", type=int, default=1024,
                   help="coefficient certification cap in bits")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="classify a whole box [1,N]^4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", choices=["real", "complex", "both"], default="both")
    p.add_argument("--conditions", default="a,b,w,L",
                   help="comma-separated subset of a,b,w,L")
    p.add_argument("--verify", action="store_true",
                   help="run the fault search on Fails and flagged verdicts")
    p.add_argument("--max-height", type=int, default=24)
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("gap", help="tuples with (b) holding and (w) failing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="consistency-check a tuple or a box")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="check every tuple in [1,N]^4")
    group.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--json", action="store_true")
    return top


def cmd_classify(args) -> int:
    params = _params_from(args)
    verdict, trace = classify(params, _field_from(args),
                              _CONDITION_FLAGS[args.condition])
    payload = {"params": params.to_json(), "field": args.field,
               "condition": args.condition, "verdict": verdict.value,
               "leaf_trace": str(trace)}
    _emit(args, payload, f"{verdict.value}\n{trace}")
    return EXIT_OK


def cmd_profile(args) -> int:
    params = _params_from(args)
    prof = profile(params)
    lines = [f"profile {params}:"]
    for f in (Field.REAL, Field.COMPLEX):
        row = ", ".join(f"{c.value}={prof.verdict(f, c).value}" for c in CONDITIONS)
        lines.append(f"  {f.value:8s} {row}")
    _emit(args, prof.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params_from(args)
    field = _field_from(args)
    condition = _CONDITION_FLAGS[args.condition]
    verdict, trace = classify(params, field, condition)
    budget = SearchBudget(max_height=args.max_height, max_arcs=args.max_arcs,
                          per_tuple_seconds=args.time_budget)
    result = find_fault(params, field, condition, budget)
    found = isinstance(result, FaultWitness)
    if verdict is Verdict.HOLDS:
        status = "DISCREPANCY" if found else "CONSISTENT"
    elif verdict is Verdict.FAILS:
        status = "CONSISTENT" if found else "EVIDENCE-ONLY"
    else:
        status = "EVIDENCE-ONLY"
    payload = {
        "params": params.to_json(), "field": field.value,
        "condition": condition.value, "classifier": verdict.value,
        "leaf_trace": str(trace), "status": status,
        "verifier": result.to_json(),
    }
    text = (f"classifier: {verdict.value}\n"
            f"verifier:   {'witness ' + json.dumps(result.to_json()['arc']) if found else 'no witness'}"
            + (f" (order {result.behavior.order_str()})" if found else "")
            + f"\nstatus:     {status}")
    _emit(args, payload, text)
    return EXIT_DISCREPANCY if status == "DISCREPANCY" else EXIT_OK


def cmd_sweep(args) -> int:
    if args.n < 1:
        sys.stderr.write("error: --n must be >= 1\n")
        return EXIT_USAGE
    fields = {"real": (Field.REAL,), "complex": (Field.COMPLEX,),
              "both": (Field.REAL, Field.COMPLEX)}[args.field]
    try:
        conditions = tuple(_CONDITION_FLAGS[c.strip()]
                           for c in args.conditions.split(",") if c.strip())
    except KeyError as exc:
        sys.stderr.write(f"error: unknown condition {exc}\n")
        return EXIT_USAGE
    budget = SearchBudget(max_height=args.max_height, per_tuple_seconds=None)
    report = sweep(args.n, fields, conditions, verify=args.verify, budget=budget)
    if args.format == "csv":
        text = report.to_csv()
    else:
        text = dump_json(report_envelope(report.to_json()))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        summary = report.summary()
        sys.stdout.write(f"wrote {args.out}: {json.dumps(summary, sort_keys=True)}\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gap(args) -> int:
    if args.n < 1:
        sys.stderr.write("error: --n must be >= 1\n")
        return EXIT_USAGE
    tuples = gap_scan(args.n)
    payload = [t.to_json() for t in tuples]
    text = "\n".join(str(t) for t in tuples) or "(none)"
    _emit(args, {"count": len(tuples), "tuples": payload}, text)
    return EXIT_OK


def cmd_check(args) -> int:
    violations = []
    if args.n is not None:
        if args.n < 1:
            sys.stderr.write("error: --n must be >= 1\n")
            return EXIT_USAGE
        from .harness import box_tuples
        for params in box_tuples(args.n):
            violations.extend(consistency_check(profile(params)))
    else:
        if None in (args.b, args.c, args.d):
            sys.stderr.write("error: check needs --a --b --c --d or --n\n")
            return EXIT_USAGE
        params = _params_from(args)
        violations = consistency_check(profile(params))
    payload = {"violations": [v.to_json() for v in violations],
               "count": len(violations)}
    text = "\n".join(f"{v.params} {v.rule}: {v.detail}" for v in violations) \
        or "no violations"
    _emit(args, payload, text)
    return EXIT_DISCREPANCY if violations else EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"classify": cmd_classify, "profile": cmd_profile,
                "verify": cmd_verify, "sweep": cmd_sweep, "gap": cmd_gap,
                "check": cmd_check}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
