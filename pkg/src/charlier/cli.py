"""Batch command line front end.

Subcommands:
    coeffs   difference-operator coefficient tables (json, csv or latex)
    poly     one polynomial from either family, in canonical text
    verify   run verification suites, emit a JSON report
    moments  moments of the weight as polynomials in a

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .classical import charlier, moment
from .diffeq import CoeffTable, build_coeff_table, coeff_ai
from .pointmass import gen_charlier
from .polynomials import Poly, Var
from .verify import SuiteSpec, run_suite
from .version import __version__


def latex_poly(p: Poly) -> str:
    """LaTeX form of the canonical rendering (same term order)."""
    if not p:
        return "0"
    parts: list[str] = []
    for exp, coeff in p.terms():
        factors = []
        for name, e in (("a", exp[1]), ("N", exp[2]), ("x", exp[0])):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{{{e}}}")
        mono = " ".join(factors)
        mag = abs(coeff)
        if mag.denominator != 1:
            mag_s = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            mag_s = str(mag.numerator)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag_s} {mono}"
        else:
            body = mag_s
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)


def _coeffs_json(table: CoeffTable) -> str:
    payload = {
        "a0": [{"n": n, "poly": str(p)} for n, p in sorted(table.a0.items())],
        "ai": [
            {
                "i": i,
                "poly": str(p),
                "deg_x": p.degree_in(Var.X),
                "deg_a": p.degree_in(Var.A),
            }
            for i, p in sorted(table.ai.items())
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _coeffs_csv(table: CoeffTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "index", "poly", "deg_x", "deg_a"])
    for n, p in sorted(table.a0.items()):
        writer.writerow(["a0", n, str(p), p.degree_in(Var.X), p.degree_in(Var.A)])
    for i, p in sorted(table.ai.items()):
        writer.writerow(["ai", i, str(p), p.degree_in(Var.X), p.degree_in(Var.A)])
    return buf.getvalue()


def _coeffs_latex(table: CoeffTable) -> str:
    rows = [f"A_0({n}) &= {latex_poly(p)}" for n, p in sorted(table.a0.items())]
    rows += [f"A_{{{i}}}(x) &= {latex_poly(p)}" for i, p in sorted(table.ai.items())]
    body = " \\\\\n".join(rows)
    return "\\begin{align*}\n" + body + "\n\\end{align*}\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_coeffs(args: argparse.Namespace) -> int:
    table = build_coeff_table(args.max_i)
    renderers = {"json": _coeffs_json, "csv": _coeffs_csv, "latex": _coeffs_latex}
    _emit(renderers[args.format](table), args.out)
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    build = charlier if args.family == "charlier" else gen_charlier
    _emit(str(build(args.n)) + "\n", args.out)
    return 0


def _cmd_moments(args: argparse.Namespace) -> int:
    rows = [{"k": k, "poly": str(moment(k))} for k in range(args.max_k + 1)]
    _emit(json.dumps(rows, indent=2) + "\n", args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = SuiteSpec(suite=args.suite, n_max=args.n_max, i_max=args.i_max)
    coeffs = None
    if args.corrupt_ai is not None:
        bad = args.corrupt_ai

        def coeffs(i: int, bad: int = bad) -> Poly:
            table = coeff_ai(i)
            return -table if i == bad else table

    report = run_suite(spec, coeffs)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0 if report.all_passed() else 1


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charlier",
        description="Exact tables and identity verification for Charlier "
        "polynomials and their point-mass generalization.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeffs = sub.add_parser("coeffs", help="emit the operator coefficient table")
    p_coeffs.add_argument("--max-i", type=_positive, default=12, metavar="I")
    p_coeffs.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p_coeffs.add_argument("--out", metavar="FILE")
    p_coeffs.set_defaults(handler=_cmd_coeffs)

    p_poly = sub.add_parser("poly", help="print one polynomial in canonical text")
    p_poly.add_argument("family", choices=("charlier", "generalized"))
    p_poly.add_argument("n", type=_nonnegative)
    p_poly.add_argument("--out", metavar="FILE")
    p_poly.set_defaults(handler=_cmd_poly)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument(
        "--suite",
        choices=("classical", "generalized", "diffeq", "all"),
        default="all",
    )
    p_verify.add_argument("--n-max", type=_nonnegative, default=12, metavar="N")
    p_verify.add_argument("--i-max", type=_positive, default=12, metavar="I")
    p_verify.add_argument(
        "--corrupt-ai",
        type=_positive,
        default=None,
        metavar="I",
        help="negate the order-I coefficient first (failure-path self test)",
    )
    p_verify.add_argument("--out", metavar="FILE")
    p_verify.set_defaults(handler=_cmd_verify)

    p_moments = sub.add_parser("moments", help="emit weight moments as JSON rows")
    p_moments.add_argument("--max-k", type=_nonnegative, default=10, metavar="K")
    p_moments.add_argument("--out", metavar="FILE")
    p_moments.set_defaults(handler=_cmd_moments)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)
