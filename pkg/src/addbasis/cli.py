"""Batch front door: parse a set expression or family spec, run the full
analysis, print a text or JSON report.

Exit codes: 0 when every verdict in the requested report passes, 1 when
some verdict fails (including "not a basis" for analyze), 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import report as report_mod
from .eps import EPS
from .primes import coefficient_sweep, family_An, family_Xn
from .primes import verify_mr as run_verify_mr
from .reduction import construct_prescribed
from .setexpr import SetExprError, parse_set_expr


def _emit(tree: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(tree, indent=2, sort_keys=True))
    else:
        print(report_mod.render_text(tree))


def _verdict_exit(tree: dict[str, Any]) -> int:
    return 0 if tree.get("verdict") else 1


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        s = parse_set_expr(args.expr)
    except SetExprError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    tree = report_mod.analyze(s, hmax=args.hmax, at_most=args.at_most)
    _emit(tree, args.format)
    return _verdict_exit(tree)


def _cmd_family(args: argparse.Namespace) -> int:
    try:
        s = _build_family(args)
    except ValueError as exc:
        print(f"family error: {exc}", file=sys.stderr)
        return 2
    tree = report_mod.analyze(s, hmax=args.hmax, at_most=args.at_most)
    _emit(tree, args.format)
    return _verdict_exit(tree)


def _build_family(args: argparse.Namespace) -> EPS:
    cap = {} if args.modulus_cap is None else {"modulus_cap": args.modulus_cap}
    if args.kind == "An":
        return family_An(int(args.params), **cap)
    if args.kind == "Xn":
        return family_Xn(int(args.params), **cap)
    counts = [int(c) for c in args.params.split(",") if c.strip()]
    return construct_prescribed(counts, **cap)


def _cmd_sweep(args: argparse.Namespace) -> int:
    result = coefficient_sweep(args.n_max, precision_bits=args.precision_bits)
    if args.format == "text" and args.rows:
        for row in result.rows():
            print(row.render())
    tree = report_mod.sweep(result, include_rows=args.rows and args.format == "json")
    _emit(tree, args.format)
    return _verdict_exit(tree)


def _cmd_verify_mr(args: argparse.Namespace) -> int:
    result = run_verify_mr(args.n_lo, args.n_hi,
                           precision_bits=args.precision_bits)
    tree = report_mod.verify_mr(result)
    _emit(tree, args.format)
    return _verdict_exit(tree)


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    tree = report_mod.oracle_check(args.seed, args.iters)
    _emit(tree, args.format)
    return _verdict_exit(tree)


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="addbasis",
        description="exact invariants of eventually periodic additive bases")
    top.add_argument("--format", choices=("text", "json"), default="text")
    sub = top.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for one set expression")
    pa.add_argument("expr", help='set expression, e.g. "6N U {2,3}"')
    pa.add_argument("--hmax", type=int, default=None,
                    help="level for the effective coverage bound (default: the order)")
    pa.add_argument("--at-most", action="store_true",
                    help="use sums of at most h elements instead of exactly h")
    pa.set_defaults(func=_cmd_analyze)

    pf = sub.add_parser("family", help="build a named family member, then analyze")
    pf.add_argument("kind", choices=("An", "Xn", "prescribed"))
    pf.add_argument("params",
                    help="family index, or comma-separated essential counts")
    pf.add_argument("--modulus-cap", type=int, default=None,
                    help="largest allowed family modulus (family-specific default)")
    pf.add_argument("--hmax", type=int, default=None)
    pf.add_argument("--at-most", action="store_true")
    pf.set_defaults(func=_cmd_family)

    ps = sub.add_parser("sweep", help="scan the coefficient against its maximum")
    ps.add_argument("n_max", type=int)
    ps.add_argument("--precision-bits", type=int, default=96)
    ps.add_argument("--rows", action="store_true",
                    help="emit the full per-n table, not just the summary")
    ps.set_defaults(func=_cmd_sweep)

    pm = sub.add_parser("verify-mr", help="check the prime-sum lower bounds on a range")
    pm.add_argument("n_lo", type=int)
    pm.add_argument("n_hi", type=int)
    pm.add_argument("--precision-bits", type=int, default=80)
    pm.set_defaults(func=_cmd_verify_mr)

    po = sub.add_parser("oracle-check",
                        help="differential test of engine versus brute force")
    po.add_argument("--seed", type=int, default=1)
    po.add_argument("--iters", type=int, default=100)
    po.set_defaults(func=_cmd_oracle_check)
    return top


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
