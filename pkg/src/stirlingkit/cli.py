"""Command-line front end.

Subcommands:

    value    one exact value (any family, any method, cross-checked)
    table    the (n, k) triangle as text, CSV or JSON
    series   generating-function coefficients, one per line
    verify   the identity audit (literal vs corrected verdicts)
    asympt   large-parameter estimates vs exact values

Exit codes: 0 success, 1 verification failure, 2 usage error.  All
values are printed as exact rationals ('p' or 'p/q'); no floats are
ever emitted except the convenience decimal column of `asympt`.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .asymptotics import asymptotic_partial, decimal_str
from .audit import SUITE_NAMES, audit_ok, report_json, report_text, run_suite
from .exact import format_rational, parse_rational
from .families import FamilySpec, ValueTable, family_egf, family_value
from .oracle import ENUMERATION_CAP
from .series import egf_coeff

__all__ = ["main", "entry"]

_FAMILY_CHOICES = (
    "classic",
    "restricted",
    "associated",
    "degenerate",
    "generalized",
    "gen_restricted",
    "free_atleast",
    "partial",
    "partial_degenerate",
    "colored_singleton",
)


class UsageError(Exception):
    pass


def _add_family_options(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=_FAMILY_CHOICES, required=required)
    p.add_argument("--alpha", type=str)
    p.add_argument("--beta", type=str)
    p.add_argument("--gamma", type=str)
    p.add_argument("--lambda", dest="lam", type=str)
    p.add_argument("--ell", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)


def _family_spec(args) -> FamilySpec:
    tag = args.family
    if tag == "partial":
        tag = "partial_degenerate"
    params = {}
    for name in ("alpha", "beta", "gamma", "lam"):
        raw = getattr(args, name, None)
        if raw is not None:
            try:
                params[name] = parse_rational(raw)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    for name in ("ell", "r", "s"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    try:
        return FamilySpec(tag, **params)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_value(args) -> int:
    spec = _family_spec(args)
    if args.n is None or args.k is None:
        raise UsageError("value needs --n and --k")
    n, k = args.n, args.k
    if args.method == "oracle" and n > ENUMERATION_CAP:
        raise UsageError(
            "method=oracle is capped at n=%d (asked for n=%d)" % (ENUMERATION_CAP, n)
        )
    try:
        canonical = family_value(spec, n, k, args.method)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.check:
        results = {args.method: canonical}
        for method in ("egf", "recurrence", "explicit", "oracle"):
            if method in results:
                continue
            if method == "oracle" and n > ENUMERATION_CAP:
                continue
            if method == "explicit" and spec.tag not in (
                "classic",
                "degenerate",
                "generalized",
            ):
                continue
            if method == "explicit" and spec.tag == "generalized" and spec.beta == 0:
                continue
            try:
                results[method] = family_value(spec, n, k, method)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        values = set(results.values())
        if len(values) > 1:
            print("method disagreement at n=%d k=%d:" % (n, k), file=sys.stderr)
            for name, value in sorted(results.items()):
                print("  %-10s %s" % (name, format_rational(value)), file=sys.stderr)
            return 1
    print(format_rational(canonical))
    return 0


def _cmd_table(args) -> int:
    spec = _family_spec(args)
    if args.nmax is None or args.nmax < 0:
        raise UsageError("table needs --nmax >= 0")
    table = ValueTable(spec, args.method)
    try:
        rows = [(n, k, format_rational(v)) for n, k, v in table.rows(args.nmax)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        payload = [{"n": n, "k": k, "value": v} for n, k, v in rows]
        _write_out(json.dumps(payload, indent=2), args.out)
    elif args.format == "text":
        width = max(len(v) for _, _, v in rows)
        lines = ["%4d %4d  %*s" % (n, k, width, v) for n, k, v in rows]
        _write_out("\n".join(lines), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        writer.writerows(rows)
        _write_out(buf.getvalue().rstrip("\n"), args.out)
    return 0


def _cmd_series(args) -> int:
    spec = _family_spec(args)
    if args.k is None or args.order is None:
        raise UsageError("series needs --k and --order")
    try:
        series = family_egf(spec, args.k, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = []
    for n in range(args.order + 1):
        c = series.coefficient(n)
        lines.append(
            "%d %s %s" % (n, format_rational(c), format_rational(egf_coeff(series, n)))
        )
    _write_out("\n".join(lines), args.out)
    return 0


def _cmd_verify(args) -> int:
    try:
        findings = run_suite(args.suite, args.nmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _write_out(json.dumps(report_json(findings, args.nmax), indent=2), args.out)
    else:
        _write_out(report_text(findings), args.out)
    return 0 if audit_ok(findings) else 1


def _cmd_asympt(args) -> int:
    for name in ("gamma", "alpha", "beta"):
        if getattr(args, name) is None:
            raise UsageError("asympt needs --gamma, --alpha, --beta and --ell")
    if args.ell is None or args.n is None or args.k is None:
        raise UsageError("asympt needs --n, --k and --ell")
    try:
        gamma = parse_rational(args.gamma)
        alpha = parse_rational(args.alpha)
        beta = parse_rational(args.beta)
        k_list = [int(part) for part in args.k.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not k_list:
        raise UsageError("empty --k list")
    rows = []
    for k in k_list:
        try:
            rows.append(
                asymptotic_partial(args.n, k, gamma, alpha, beta, args.ell, args.m, args.mode)
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.format == "json":
        payload = []
        for row in rows:
            payload.append(
                {
                    "k": row.k,
                    "n_total": row.n_total,
                    "mode": row.mode,
                    "estimate": None if row.estimate is None else format_rational(row.estimate),
                    "exact": None if row.exact is None else format_rational(row.exact),
                    "rel_error": None if row.rel_error is None else format_rational(row.rel_error),
                    "rel_error_decimal": None
                    if row.rel_error is None
                    else decimal_str(row.rel_error, 8),
                    "note": row.note,
                }
            )
        _write_out(json.dumps(payload, indent=2), args.out)
        return 0
    lines = ["%6s %8s %-26s %-26s %-20s %-12s %s" % (
        "k", "n_total", "estimate", "exact", "rel_error", "(decimal)", "note")]
    for row in rows:
        lines.append(
            "%6d %8d %-26s %-26s %-20s %-12s %s"
            % (
                row.k,
                row.n_total,
                "-" if row.estimate is None else format_rational(row.estimate),
                "-" if row.exact is None else format_rational(row.exact),
                "-" if row.rel_error is None else format_rational(row.rel_error),
                "-" if row.rel_error is None else decimal_str(row.rel_error, 8),
                row.note or "",
            )
        )
    _write_out("\n".join(lines), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirlingkit",
        description="Exact values, tables, series, identity audit and asymptotics "
        "for the generalized/degenerate/incomplete partition-number hierarchy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="one exact value")
    _add_family_options(p_value)
    p_value.add_argument("--n", type=int)
    p_value.add_argument("--k", type=int)
    p_value.add_argument(
        "--method", choices=("egf", "recurrence", "explicit", "oracle"), default="egf"
    )
    p_value.add_argument("--check", action="store_true",
                         help="compute via every applicable method; exit 1 on disagreement")
    p_value.set_defaults(func=_cmd_value)

    p_table = sub.add_parser("table", help="triangle of values up to --nmax")
    _add_family_options(p_table)
    p_table.add_argument("--nmax", type=int)
    p_table.add_argument(
        "--method", choices=("egf", "recurrence", "explicit", "oracle"), default="egf"
    )
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p_table.add_argument("--out")
    p_table.set_defaults(func=_cmd_table)

    p_series = sub.add_parser("series", help="generating-function coefficients")
    _add_family_options(p_series)
    p_series.add_argument("--k", type=int)
    p_series.add_argument("--order", type=int)
    p_series.add_argument("--out")
    p_series.set_defaults(func=_cmd_series)

    p_verify = sub.add_parser("verify", help="identity audit")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p_verify.add_argument("--nmax", type=int, default=8)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=_cmd_verify)

    p_asympt = sub.add_parser("asympt", help="estimate vs exact comparison")
    p_asympt.add_argument("--n", type=int)
    p_asympt.add_argument("--k", type=str, help="comma-separated list of k values")
    p_asympt.add_argument("--m", type=int, default=3)
    p_asympt.add_argument("--mode", choices=("normalized", "literal"), default="normalized")
    p_asympt.add_argument("--gamma", type=str)
    p_asympt.add_argument("--alpha", type=str)
    p_asympt.add_argument("--beta", type=str)
    p_asympt.add_argument("--ell", type=int)
    p_asympt.add_argument("--format", choices=("text", "json"), default="text")
    p_asympt.add_argument("--out")
    p_asympt.set_defaults(func=_cmd_asympt)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
