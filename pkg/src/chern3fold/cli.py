"""Command-line surface.

Subcommands:

    ci-invariants A1 A2     invariant profile of a complete intersection
    check ...               run the constraint catalog on one profile
    enumerate --d D --s S   fixed-degree feasibility cloud
    trace FAMILY TMIN TMAX  family sweep toward the limit segment
    bound S                 minimal degree forced by containment degree S
    region --d-min --d-max  clouds over a degree range

Exit codes: 0 success; 1 when `check` finds a violated constraint;
2 on invalid input or output errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .constraints import (
    CHECK_ORDER,
    InapplicableError,
    SlackPolicy,
    check_all,
    min_degree_for_s,
)
from .geography import DEGREE_CAP, FamilySpec, enumerate_feasible, family_trace
from .invariants import InvalidTupleError, InvariantTuple
from . import output

# Checks that run when no containment degree s is available.
S_FREE_IDS = ("ghit", "castelnuovo", "prop1i", "prop1ii")


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _add_policy_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--policy", choices=("strict", "slack", "asymptotic"),
                        default="slack", help="handling of lower-order terms")
    parser.add_argument("--slack-coeff", type=_fraction_arg, default=Fraction(1),
                        metavar="Q", help="slack term coefficient (default 1)")
    parser.add_argument("--slack-exp", type=_fraction_arg, default=Fraction(7, 2),
                        metavar="Q", help="slack term exponent for the chi bound (default 7/2)")


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--csv", type=Path, metavar="PATH", help="write a CSV table")
    parser.add_argument("--svg", type=Path, metavar="PATH", help="write an SVG scatter")
    parser.add_argument("--json", action="store_true", help="emit full JSON on stdout")


def _policy(args) -> SlackPolicy:
    return SlackPolicy(mode=args.policy, coefficient=args.slack_coeff,
                       exponent=args.slack_exp)


def _emit(text: str, path: Path) -> None:
    path.write_text(text, encoding="utf-8")


def _print_json(obj) -> None:
    print(json.dumps(obj))


def cmd_ci_invariants(args) -> int:
    from .chow import CompleteIntersection, ci_invariants

    t = ci_invariants(CompleteIntersection(args.a1, args.a2))
    _print_json(t.to_record())
    return 0


def _load_tuple(args) -> InvariantTuple:
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            record = json.load(fh)
        if not isinstance(record, dict):
            raise InvalidTupleError("tuple file must hold a JSON object")
        return InvariantTuple.from_record(record)
    fields = {"d": args.d, "h2k": args.h2k, "hk2": args.hk2,
              "k3": args.k3, "chi": args.chi}
    missing = [k for k, v in fields.items() if v is None]
    if missing:
        raise InvalidTupleError(
            "give --file or all of --d --h2k --hk2 --k3 --chi "
            f"(missing: {', '.join(missing)})")
    return InvariantTuple(**fields, s=args.s)


def cmd_check(args) -> int:
    t = _load_tuple(args)
    t.validate()
    s_eff = args.s if args.s is not None else t.s
    ids = None if s_eff is not None else S_FREE_IDS
    policy = _policy(args)
    report = check_all(t, s_eff, policy, ids)
    if args.json:
        _print_json(output.report_json(t, s_eff, policy, report))
    else:
        if s_eff is None:
            print("note: no s given; skipping genus, boss, prop2i-iii")
        sys.stdout.write(output.report_table(report))
    return 0 if report.all_satisfied else 1


def cmd_enumerate(args) -> int:
    policy = _policy(args)
    cloud = enumerate_feasible(args.d, args.s, policy, args.positivity,
                               include_asymptotic=args.boss,
                               d_max_override=args.d_max_override)
    if args.csv:
        _emit(output.csv_document(output.cloud_rows(cloud)), args.csv)
    if args.svg:
        _emit(output.cloud_svg([cloud]), args.svg)
    if args.json:
        _print_json(output.cloud_json(cloud))
    else:
        m = cloud.metadata
        _print_json({"d": m.d, "s": m.s, "positivity": m.positivity,
                     "boss": m.asymptotic_included,
                     "policy": output.policy_json(m.policy), "count": m.count})
    return 0


def cmd_trace(args) -> int:
    if args.family == "ci-fixed-s":
        if args.s_fixed is None:
            raise InvalidTupleError("trace ci-fixed-s needs --s-fixed")
        spec = FamilySpec.ci_fixed_s(args.s_fixed, args.t_min, args.t_max)
    else:
        spec = FamilySpec.ci_diagonal(args.t_min, args.t_max)
    trace = family_trace(spec)
    if args.csv:
        _emit(output.csv_document(output.trace_rows(trace)), args.csv)
    if args.svg:
        _emit(output.trace_svg(trace), args.svg)
    if args.json:
        _print_json(output.trace_json(trace))
    else:
        defined = sum(1 for p in trace.points if p.ratios is not None)
        _print_json({"family": spec.describe(), "points": len(trace.points),
                     "defined": defined})
    return 0


def cmd_bound(args) -> int:
    _print_json({"s": args.s, "min_degree": min_degree_for_s(args.s)})
    return 0


def cmd_region(args) -> int:
    if args.d_min < 1 or args.d_min > args.d_max:
        raise InvalidTupleError(
            f"need 1 <= d-min <= d-max, got [{args.d_min}, {args.d_max}]")
    policy = _policy(args)
    clouds = []
    for d in range(args.d_min, args.d_max + 1):
        clouds.append(enumerate_feasible(d, args.s, policy, args.positivity,
                                         include_asymptotic=args.boss,
                                         d_max_override=args.d_max_override))
    if args.csv:
        rows = [row for cloud in clouds for row in output.cloud_rows(cloud)]
        _emit(output.csv_document(rows), args.csv)
    if args.svg:
        _emit(output.cloud_svg(clouds), args.svg)
    counts = {str(c.metadata.d): c.metadata.count for c in clouds}
    _print_json({"d_min": args.d_min, "d_max": args.d_max, "s": args.s,
                 "positivity": args.positivity, "counts": counts,
                 "total": sum(c.metadata.count for c in clouds)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chern3fold",
        description="Exact Chern numbers, inequality checks and ratio "
                    "geography for threefolds in P^5.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ci-invariants",
                       help="invariant profile of a complete intersection")
    p.add_argument("a1", type=int)
    p.add_argument("a2", type=int)
    p.set_defaults(func=cmd_ci_invariants)

    p = sub.add_parser("check", help="run the constraint catalog on a profile")
    p.add_argument("--file", type=Path, help="JSON record with d, h2k, hk2, k3, chi[, s]")
    p.add_argument("--d", type=int)
    p.add_argument("--h2k", type=int)
    p.add_argument("--hk2", type=int)
    p.add_argument("--k3", type=int)
    p.add_argument("--chi", type=int)
    p.add_argument("--s", type=int, help="containment degree (falls back to the record)")
    _add_policy_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="fixed-degree feasibility cloud")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--positivity", action="store_true",
                   help="restrict to h2k, hk2, k3 > 0")
    p.add_argument("--boss", action="store_true",
                   help="also apply the asymptotic bounds (boss, prop2ii, prop2iii)")
    p.add_argument("--d-max-override", action="store_true",
                   help=f"allow degrees above the default cap {DEGREE_CAP}")
    _add_policy_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("trace", help="sweep a complete-intersection family")
    p.add_argument("family", choices=("ci-diagonal", "ci-fixed-s"))
    p.add_argument("t_min", type=int)
    p.add_argument("t_max", type=int)
    p.add_argument("--s-fixed", type=int, help="fixed first degree for ci-fixed-s")
    _add_output_args(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("bound", help="minimal degree from the containment degree")
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("region", help="feasibility clouds over a degree range")
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--positivity", action="store_true")
    p.add_argument("--boss", action="store_true")
    p.add_argument("--d-max-override", action="store_true")
    _add_policy_args(p)
    p.add_argument("--csv", type=Path, metavar="PATH")
    p.add_argument("--svg", type=Path, metavar="PATH")
    p.set_defaults(func=cmd_region)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidTupleError, InapplicableError, ValueError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
