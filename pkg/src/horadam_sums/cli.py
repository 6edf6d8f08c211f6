"""Command-line interface: evaluate sums, print Ledin forms and tables, verify.

Exit codes: 0 success / verification PASS, 1 verification mismatch,
2 invalid input or guard violation.  Every failure path writes a single
"error: ..." line to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .closed_forms import (
    ROUTE_NAMES,
    SumSpec,
    applicable_routes,
    evaluate_route,
    horadam_ledin_explicit,
)
from .errors import GuardViolation
from .ledin import LedinForm, horadam_ledin_recursive
from .rationals import format_rational, parse_rational
from .sequences import HoradamParams, named_sequence_params
from .verify import DEFAULT_GRID_PARAMS, brute_sum, verify_grid


class CliError(Exception):
    """Invalid request; reported as 'error: ...' with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _sequence_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seq",
        choices=["fibonacci", "lucas", "pell", "custom"],
        default=None,
        help="named sequence (default: fibonacci)",
    )
    parser.add_argument(
        "--params",
        metavar="a,b,p,q",
        help="custom Horadam parameters as rational literals, e.g. 3/2,-5,7/3,2/5",
    )


def _format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="horadam-sums",
        description="Exact power sums of Fibonacci, Lucas and Horadam sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sum_p = sub.add_parser("sum", help="evaluate sum_{k=1..n} k^m w_{hk+r}")
    _sequence_options(sum_p)
    _format_option(sum_p)
    sum_p.add_argument("--m", type=int, required=True)
    sum_p.add_argument("--n", type=int, required=True)
    sum_p.add_argument("--r", type=int, default=0)
    sum_p.add_argument("--h", type=int, default=1)
    sum_p.add_argument("--weighted", action="store_true", help="weight terms by V_h^-k")
    sum_p.add_argument("--route", choices=("brute",) + ROUTE_NAMES, default=None)
    sum_p.set_defaults(func=_run_sum)

    form_p = sub.add_parser("form", help="print the Ledin form for one m")
    _sequence_options(form_p)
    _format_option(form_p)
    form_p.add_argument("--m", type=int, required=True)
    form_p.add_argument("--r", type=int, default=0)
    form_p.add_argument("--route", choices=["recursive", "explicit"], default="recursive")
    form_p.set_defaults(func=_run_form)

    table_p = sub.add_parser("table", help="print Ledin forms for m = 0..max-m")
    _sequence_options(table_p)
    _format_option(table_p)
    table_p.add_argument("--max-m", dest="max_m", type=int, required=True)
    table_p.add_argument("--r", type=int, default=0)
    table_p.add_argument("--route", choices=["recursive", "explicit"], default="recursive")
    table_p.set_defaults(func=_run_table)

    verify_p = sub.add_parser("verify", help="run the route-equality grid")
    _sequence_options(verify_p)
    _format_option(verify_p)
    verify_p.add_argument(
        "--grid",
        metavar="m=6,n=40,r=8,h=3",
        default=None,
        help="grid bounds: m,n,h maxima and |r| bound",
    )
    verify_p.set_defaults(func=_run_verify)
    return parser


def _resolve_params(args) -> HoradamParams | None:
    """Params from --params or --seq; None when neither was given explicitly."""
    if args.params:
        parts = args.params.split(",")
        if len(parts) != 4:
            raise CliError(f"--params expects four rational literals a,b,p,q, got {args.params!r}")
        try:
            a, b, p, q = (parse_rational(part) for part in parts)
            return HoradamParams(a, b, p, q)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if args.seq == "custom":
        raise CliError("--seq custom requires --params a,b,p,q")
    if args.seq is None:
        return None
    return named_sequence_params(args.seq)


def _require_params(args) -> HoradamParams:
    params = _resolve_params(args)
    return params if params is not None else named_sequence_params("fibonacci")


def _coeff_list(form_poly) -> str:
    return "[" + ", ".join(format_rational(c) for c in form_poly.coeffs) + "]"


def _form_for(args, m: int, r: int, params: HoradamParams) -> LedinForm:
    if args.route == "explicit":
        return horadam_ledin_explicit(m, r, params)
    return horadam_ledin_recursive(m, r, params)


def _run_sum(args) -> int:
    params = _require_params(args)
    spec = SumSpec(params, args.m, args.n, args.r, args.h, args.weighted)

    if args.route == "brute":
        value, chosen = brute_sum(spec), "brute"
    elif args.route is not None:
        value, chosen = evaluate_route(spec, args.route).value, args.route
    else:
        default_route = "weighted_ap" if spec.weighted else "ap"
        try:
            value, chosen = evaluate_route(spec, default_route).value, default_route
        except GuardViolation as exc:
            value, chosen = brute_sum(spec), "brute"
            print(f"notice: {exc}; falling back to brute force", file=sys.stderr)

    if args.format == "text":
        print(format_rational(value))
        return 0

    routes: dict[str, Fraction] = {"brute": brute_sum(spec)}
    guards: list[Fraction] = []
    for route in applicable_routes(spec):
        try:
            report = evaluate_route(spec, route)
        except GuardViolation:
            continue
        routes[route] = report.value
        for g in report.guard_denominators:
            if g not in guards:
                guards.append(g)

    if args.format == "json":
        payload = {
            "value": format_rational(value),
            "routes": {name: format_rational(v) for name, v in routes.items()},
            "guards": [format_rational(g) for g in guards],
        }
        print(json.dumps(payload))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["route", "value"])
        for name, v in routes.items():
            writer.writerow([name, format_rational(v)])
    return 0


def _run_form(args) -> int:
    params = _require_params(args)
    if args.m < 0:
        raise CliError("m must be non-negative")
    form = _form_for(args, args.m, args.r, params)
    if args.format == "text":
        print(f"P1 = {_coeff_list(form.p1)}")
        print(f"P2 = {_coeff_list(form.p2)}")
        print(f"C = {format_rational(form.constant)}")
    elif args.format == "json":
        print(json.dumps(_form_dict(args.m, form)))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["m", "r", "p1", "p2", "constant"])
        writer.writerow(
            [args.m, args.r, _coeff_list(form.p1), _coeff_list(form.p2), format_rational(form.constant)]
        )
    return 0


def _form_dict(m: int, form: LedinForm) -> dict:
    return {
        "m": m,
        "r": form.shift,
        "p1": [format_rational(c) for c in form.p1.coeffs],
        "p2": [format_rational(c) for c in form.p2.coeffs],
        "constant": format_rational(form.constant),
    }


def _run_table(args) -> int:
    params = _require_params(args)
    if args.max_m < 0:
        raise CliError("max-m must be non-negative")
    forms = [(m, _form_for(args, m, args.r, params)) for m in range(args.max_m + 1)]
    if args.format == "text":
        for m, form in forms:
            print(
                f"m={m}: P1={_coeff_list(form.p1)} P2={_coeff_list(form.p2)} "
                f"C={format_rational(form.constant)}"
            )
    elif args.format == "json":
        print(json.dumps({"r": args.r, "rows": [_form_dict(m, f) for m, f in forms]}))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["m", "p1", "p2", "constant"])
        for m, form in forms:
            writer.writerow(
                [m, _coeff_list(form.p1), _coeff_list(form.p2), format_rational(form.constant)]
            )
    return 0


def _parse_grid(text: str | None) -> dict:
    bounds = {"m": 6, "n": 40, "r": 8, "h": 3}
    if text:
        for part in text.split(","):
            key, sep, value = part.partition("=")
            key = key.strip()
            if not sep or key not in bounds:
                raise CliError(f"bad grid entry {part!r}; use m=..,n=..,r=..,h=..")
            try:
                bounds[key] = int(value)
            except ValueError:
                raise CliError(f"grid bound {value!r} is not an integer") from None
    return bounds


def _run_verify(args) -> int:
    bounds = _parse_grid(args.grid)
    params = _resolve_params(args)
    params_list = DEFAULT_GRID_PARAMS if params is None else (params,)
    report = verify_grid(
        m_max=bounds["m"],
        n_max=bounds["n"],
        r_min=-bounds["r"],
        r_max=bounds["r"],
        h_max=bounds["h"],
        params_list=params_list,
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(
            ["a", "b", "p", "q", "m", "n", "r", "h", "weighted", "route", "expected", "got"]
        )
        for mism in report.mismatches:
            row = mism.to_dict()
            writer.writerow(
                [row["params"][k] for k in ("a", "b", "p", "q")]
                + [row["m"], row["n"], row["r"], row["h"], row["weighted"], row["route"], row["expected"], row["got"]]
            )
    else:
        print(f"grid: {report.grid_description}")
        print(f"cases run: {report.cases_run}")
        print(f"guard skips: {report.guard_skips}")
        print(f"mismatches: {len(report.mismatches)}")
        for mism in report.mismatches[:10]:
            print(f"  MISMATCH {mism.to_dict()}")
        print(f"wall time: {report.wall_time:.2f}s")
        print("result: PASS" if report.passed else "result: FAIL")
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GuardViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
