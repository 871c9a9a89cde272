"""Command line front end.

Three subcommands:

``table``
    Print the first rows of the q-Euler table: E_{n,q}, its value at
    q = 1 (the classical Euler number) and the Frobenius-Euler number
    H_n(-1/q) it rescales.

``verify``
    Run the identity suite over parameter grids and report pass/fail
    counts.  Identity ids may be given as unique prefixes.

``padic``
    Run the truncated fermionic sum against the exact q-Euler
    polynomial value and report how fast the p-adic valuation of the
    error grows with the truncation depth.

Exit codes: 0 success, 1 an identity or convergence check failed,
2 usage error, 3 output could not be written.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .euler import MINUS_Q_INVERSE, euler_number_q, frobenius_euler, table_rows
from .exactalg import rational_to_json
from .identities import REGISTRY, default_ranges, run_suite
from .padic import (
    CALIBRATED_SLACK,
    is_odd_prime,
    witt_convergence_check,
)

FORMATS = ("json", "csv", "latex")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact q-Euler numbers, identity verification, p-adic checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print q-Euler numbers")
    table.add_argument("--n-max", type=_nonneg_int, default=10,
                       help="largest index n (default 10)")
    _add_output_flags(table)
    table.set_defaults(handler=cmd_table)

    verify = sub.add_parser("verify", help="verify identities over grids")
    verify.add_argument("--all", action="store_true",
                        help="select every identity in the registry")
    verify.add_argument("--id", action="append", dest="ids", metavar="TAG",
                        help="identity id (unique prefix accepted, repeatable)")
    verify.add_argument("--n-max", type=_nonneg_int, default=None)
    verify.add_argument("--m-max", type=_nonneg_int, default=None)
    verify.add_argument("--k-max", type=_nonneg_int, default=None)
    verify.add_argument("--s-max", type=_pos_int, default=None)
    _add_output_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    padic = sub.add_parser("padic", help="p-adic convergence checks")
    padic.add_argument("--p", type=_pos_int, default=3, help="odd prime (default 3)")
    padic.add_argument("--precision", type=_pos_int, default=3, metavar="M",
                       help="work modulo p**M (default 3)")
    padic.add_argument("--depth", type=_pos_int, default=6, metavar="N",
                       help="largest truncation exponent (default 6)")
    padic.add_argument("--q0", type=_int, default=None,
                       help="integer base, q0 = 1 (mod p) (default 1+p)")
    padic.add_argument("--n-max", type=_nonneg_int, default=4,
                       help="largest polynomial degree (default 4)")
    padic.add_argument("--x0", action="append", dest="x0s", type=_nonneg_int,
                       help="evaluation point (repeatable, default 0 1 2)")
    _add_output_flags(padic)
    padic.set_defaults(handler=cmd_padic)

    return parser


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=FORMATS, default="json",
                     help="output format (default json)")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write output to PATH instead of stdout")


def _emit(text: str, out_path: str | None) -> int:
    """Write ``text`` to stdout or to a file.  Returns 0 or 3."""
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return 0
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 3
    return 0


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# -- table ------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    n_max = args.n_max
    if args.format == "json":
        text = json.dumps({"rows": table_rows(n_max)}, indent=2)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["n", "e_nq", "e_at_q1", "frobenius"])
        for n in range(n_max + 1):
            e = euler_number_q(n)
            writer.writerow([n, str(e), str(e(Fraction(1))),
                             str(frobenius_euler(n, MINUS_Q_INVERSE))])
        text = buffer.getvalue()
    else:
        lines = []
        for n in range(n_max + 1):
            e = euler_number_q(n)
            classical = e(Fraction(1))
            frob = frobenius_euler(n, MINUS_Q_INVERSE)
            lines.append(
                f"{n} & ${e.latex()}$ & ${_latex_fraction(classical)}$"
                f" & ${frob.latex()}$ \\\\"
            )
        text = "\n".join(lines)
    return _emit(text, args.out)


def _latex_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


# -- verify -----------------------------------------------------------


def _resolve_identity_token(token: str) -> str | None:
    if token in REGISTRY:
        return token
    matches = [tag for tag in REGISTRY if tag.startswith(token)]
    if len(matches) == 1:
        return matches[0]
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.ids and args.all:
        return _usage_error("--id and --all are mutually exclusive")
    ids = None
    if args.ids:
        ids = []
        for token in args.ids:
            tag = _resolve_identity_token(token)
            if tag is None:
                known = ", ".join(REGISTRY)
                return _usage_error(
                    f"unknown identity id {token!r}; known ids: {known}")
            if tag not in ids:
                ids.append(tag)
    ranges = default_ranges(ids=ids, n_max=args.n_max, m_max=args.m_max,
                            k_max=args.k_max, s_max=args.s_max)
    report = run_suite(ranges)

    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["id", "params", "status"])
        for tag, params, status in report.case_log:
            writer.writerow([tag, " ".join(str(p) for p in params), status])
        text = buffer.getvalue()
    else:
        lines = []
        for tag in ranges:
            cases = [row for row in report.case_log if row[0] == tag]
            passed = sum(1 for row in cases if row[2] == "pass")
            failed = sum(1 for row in cases if row[2] == "fail")
            lines.append(f"\\texttt{{{_latex_escape(tag)}}} & {len(cases)}"
                         f" & {passed} & {failed} \\\\")
        text = "\n".join(lines)

    code = _emit(text, args.out)
    if code != 0:
        return code
    return 0 if report.failed == 0 else 1


def _latex_escape(text: str) -> str:
    return text.replace("_", "\\_")


# -- padic ------------------------------------------------------------


def cmd_padic(args: argparse.Namespace) -> int:
    p = args.p
    precision = args.precision
    depth = args.depth
    if not is_odd_prime(p):
        return _usage_error(f"--p must be an odd prime, got {p}")
    q0 = args.q0 if args.q0 is not None else 1 + p
    if (q0 - 1) % p != 0:
        return _usage_error(
            f"--q0 must satisfy q0 = 1 (mod p), got q0={q0} for p={p}")
    threshold = precision + CALIBRATED_SLACK
    if depth < threshold:
        return _usage_error(
            f"--depth {depth} is too small to decide convergence to"
            f" precision {precision}; need at least {threshold}")
    x0s = args.x0s if args.x0s else [0, 1, 2]

    reports = []
    failures = []
    for n in range(args.n_max + 1):
        for x0 in x0s:
            report = witt_convergence_check(n=n, x0=x0, p=p, q0=q0,
                                            M=precision, N_max=depth)
            reports.append(report)
            reached = report.reached_at()
            if not report.monotone:
                failures.append(
                    f"n={n} x0={x0}: valuation sequence not non-decreasing")
            if reached is None or reached > threshold:
                failures.append(
                    f"n={n} x0={x0}: valuation did not reach {precision}"
                    f" by depth {threshold}")

    if args.format == "json":
        payload = {
            "p": p,
            "M": precision,
            "q0": q0,
            "depth": depth,
            "slack": CALIBRATED_SLACK,
            "reports": [report.to_json() for report in reports],
            "failures": failures,
        }
        text = json.dumps(payload, indent=2)
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["p", "M", "q0", "n", "x0", "N", "S", "val"])
        for report in reports:
            for entry in report.entries:
                writer.writerow([report.p, report.M, report.q0, report.n,
                                 report.x0, entry.N, str(entry.partial_sum),
                                 entry.valuation])
        text = buffer.getvalue()
    else:
        lines = []
        for report in reports:
            reached = report.reached_at()
            shown = reached if reached is not None else "--"
            mono = "yes" if report.monotone else "no"
            lines.append(f"{report.n} & {report.x0} & {shown} & {mono} \\\\")
        text = "\n".join(lines)

    code = _emit(text, args.out)
    if code != 0:
        return code
    return 0 if not failures else 1


# -- entry point ------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
