"""Command-line front end.

Subcommands:

  table   -- coefficient tables of the named graded sequences
  expand  -- expansion coefficients of a series in a named basis
  verify  -- symbolic identity checks (Euler-MacLaurin, Sheffer, genfun)
  sum     -- numeric Euler-MacLaurin instances (harmonic / Stirling)
  eval    -- numeric evaluation of a series at a point

Exit codes: 0 success, 1 verification failure, 2 usage error (argparse
default).  Output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classics import (
    bernoulli_seq,
    emit_table,
    hermite_seq,
    laguerre_genfun_check,
    laguerre_sheffer_seq,
)
from .eulermac import (
    em_operator_residual,
    first_omitted_term_bound,
    harmonic_identity,
    stirling_identity,
)
from .numeric import eval_series
from .operators import forward_difference
from .series import LogSeries, OrderTag
from .sheffer import AssociatedRule, GradedSeq, HarmonicRule

_SEQ_NAMES = ("bernoulli", "hermite", "laguerre", "harmonic")


def _named_seq(name: str, sigma: Fraction, grade: Fraction) -> GradedSeq:
    if name == "bernoulli":
        return bernoulli_seq()
    if name == "hermite":
        return hermite_seq(sigma)
    if name == "laguerre":
        return laguerre_sheffer_seq(grade)
    if name == "harmonic":
        return GradedSeq(HarmonicRule())
    raise ValueError(f"unknown sequence {name!r}")


def _cmd_table(args: argparse.Namespace) -> int:
    table = emit_table(
        args.name,
        args.a_from,
        args.a_to,
        args.depth,
        order=OrderTag.ZERO if args.order == "zero" else OrderTag.GENERIC,
        sigma=Fraction(args.sigma),
        grade=Fraction(args.grade),
    )
    print(table.to_latex() if args.format == "latex" else table.to_json())
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    series = LogSeries.from_json(args.series)
    seq = _named_seq(args.basis, Fraction(args.sigma), Fraction(args.grade))
    coeffs = seq.taylor_coeffs(series, args.amin)
    print(json.dumps([[a, str(c)] for a, c in sorted(coeffs.items(), reverse=True)]))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    ok = True
    if args.what == "em":
        for k in range(1, args.depth + 1):
            report = em_operator_residual(k, omit_linear_term=args.corrupt)
            status = "pass" if report.symbolic_ok else "FAIL"
            if not report.symbolic_ok:
                ok = False
            print(f"em residual K={k}: {status} (residual lead: {report.residual_lead})")
    elif args.what == "sheffer":
        seq = _named_seq(args.seq, Fraction(args.sigma), Fraction(args.grade))
        order = OrderTag.GENERIC
        for a in range(-args.depth // 2, args.depth // 2 + 1):
            good = seq.check_lowering(order, a, a - args.depth)
            good &= seq.check_binomial_shift(order, a, 1, a - args.depth)
            if args.corrupt:
                good = False
            status = "pass" if good else "FAIL"
            if not good:
                ok = False
            print(f"sheffer identities ({args.seq}, a={a}): {status}")
    elif args.what == "genfun":
        if args.seq == "laguerre":
            good = laguerre_genfun_check(int(Fraction(args.grade)), args.depth)
        elif args.seq == "assoc-delta":
            good = GradedSeq(AssociatedRule(forward_difference)).genfun_check_order_zero(args.depth)
        else:
            seq = _named_seq(args.seq, Fraction(args.sigma), Fraction(args.grade))
            good = seq.genfun_check_order_zero(args.depth)
        if args.corrupt:
            good = False
        status = "pass" if good else "FAIL"
        if not good:
            ok = False
        print(f"generating function ({args.seq}, K={args.depth}): {status}")
    return 0 if ok else 1


def _cmd_sum(args: argparse.Namespace) -> int:
    x = Fraction(args.x)
    if args.kind == "harmonic":
        lhs, rhs, err = harmonic_identity(x, args.n, args.order)
        bound = first_omitted_term_bound(float(x), args.n, args.order)
        print(f"exact lhs = {lhs} = {float(lhs):.15g}")
    else:
        lhs, rhs, err = stirling_identity(x, args.n, args.order)
        bound = first_omitted_term_bound(float(x), args.n, args.order, log_case=True)
        print(f"lhs = {lhs:.15g}")
    print(f"series rhs = {rhs:.15g}")
    print(f"abs err = {err:.6g} (first omitted term bound: {bound:.6g})")
    return 0 if err <= bound else 1


def _cmd_eval(args: argparse.Namespace) -> int:
    series = LogSeries.from_json(args.series)
    value, bound = eval_series(series, args.level, args.x)
    print(f"{value:.15g}")
    print(f"trunc bound ~ {bound:.6g}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="logalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a sequence coefficient table")
    p.add_argument("name", choices=_SEQ_NAMES)
    p.add_argument("--from", dest="a_from", type=int, default=-2)
    p.add_argument("--to", dest="a_to", type=int, default=2)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--sigma", default="1", help="Hermite scale (1 matches the printed table)")
    p.add_argument("--grade", default="0", help="Laguerre grade b")
    p.add_argument("--order", choices=("zero", "generic"), default="generic")
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("expand", help="expand a series in a named basis")
    p.add_argument("--basis", choices=_SEQ_NAMES, required=True)
    p.add_argument("--series", required=True, help="LogSeries JSON")
    p.add_argument("--amin", type=int, required=True)
    p.add_argument("--sigma", default="1/2")
    p.add_argument("--grade", default="0")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("verify", help="run symbolic identity checks")
    p.add_argument("what", choices=("em", "sheffer", "genfun"))
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--seq", choices=_SEQ_NAMES + ("assoc-delta",), default="bernoulli")
    p.add_argument("--sigma", default="1/2")
    p.add_argument("--grade", default="0")
    p.add_argument("--corrupt", action="store_true", help="negative control: force a failure")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sum", help="numeric Euler-MacLaurin summation checks")
    p.add_argument("kind", choices=("harmonic", "stirling"))
    p.add_argument("--x", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=6)
    p.set_defaults(func=_cmd_sum)

    p = sub.add_parser("eval", help="evaluate a series numerically")
    p.add_argument("--series", required=True, help="LogSeries JSON")
    p.add_argument("--level", type=int, choices=(0, 1), required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
