"""Command-line interface.  Every subcommand is a thin wrapper over the library."""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from dataclasses import dataclass

from . import bounds, scan
from .catalog import (
    CatalogError,
    EvaluationError,
    default_catalog_path,
    default_values_path,
    load_catalog,
    load_printed_values,
)
from .factored import factor
from .polygons import PolygonOrder, counts, order_feasible
from .sieves import sieve

PRINTED_F4_COUNTS = {"hexagon": 626, "octagon": 625}


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str


def _decimal(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _positive(text: str) -> int:
    n = _decimal(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1")
    return n


def _dot(f) -> str:
    return str(f).replace("*", "·")


def _cmp(x, n) -> str:
    return "<=" if x <= n else ">"


def cmd_factor(args) -> int:
    print(f"{args.n} = {_dot(factor(args.n))}")
    return 0


def cmd_sieve(args) -> int:
    n = factor(args.n)
    r = sieve(n)
    print(f"n = {args.n} = {_dot(n)}")
    print(f"a = {r.a.value}  a^3 = {(r.a ** 3).value} {_cmp(r.a ** 3, n)} n")
    for label, b in (("b_literal", r.b_literal), ("b_full", r.b_full)):
        print(f"{label} = {b.value}  {label}^2 = {(b ** 2).value} {_cmp(b ** 2, n)} n")
    return 0


def cmd_feasible(args) -> int:
    try:
        order = PolygonOrder(args.kind, args.s, args.t)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    c = counts(order)
    verdict = order_feasible(order, b_variant=args.b_variant)
    print(f"{args.kind} ({args.s},{args.t}): points={c.points.value} lines={c.lines.value} flags={c.flags.value}")
    if verdict.feasible:
        print("feasible")
    else:
        print(f"infeasible ({', '.join(verdict.failed_checks)})")
    return 0


def _load(args):
    catalog = load_catalog(args.catalog or default_catalog_path())
    values = load_printed_values(default_values_path())
    return catalog, values


def cmd_appendix(args) -> int:
    catalog, values = _load(args)
    mode = "hexagon" if args.table == "B" else "octagon"
    rows = scan.regenerate_appendix(mode, catalog, args.b_variant, values, jobs=args.jobs)
    holds = sum(r.inequality_holds for r in rows)
    matched = sum(bool(r.matches_paper) for r in rows)
    compared = sum(r.matches_paper is not None for r in rows)
    footer = [
        f"table={args.table} mode={mode}" + (f" b_variant={args.b_variant}" if mode == "octagon" else ""),
        f"rows={len(rows)} holds={holds}/{len(rows)} matches_paper={matched}/{compared}",
    ]
    failing = [r.group.label for r in rows if not r.inequality_holds]
    if failing:
        footer.append("inequality fails for: " + "; ".join(failing))
    if mode == "octagon":
        agree = scan.printed_octagon_agreement(catalog, values)
        footer.append(
            "printed octagon values reproduced by: "
            + ", ".join(f"{v}={agree[v]}/{compared}" for v in ("literal", "full", "a"))
        )
    print(scan.appendix_csv(rows, exact=args.format == "exact", footer=footer), end="")
    if failing or (args.strict and matched != compared):
        return 1
    return 0


def cmd_scan_f4(args) -> int:
    count, rows = scan.scan_f4(args.qmax, args.mode, args.b_variant, jobs=args.jobs)
    footer = [f"mode={args.mode}" + (f" b_variant={args.b_variant}" if args.mode == "octagon" else ""),
              f"prime_powers={len(rows)} count={count}"]
    if args.mode == "octagon":
        by_variant = scan.f4_variant_counts(args.qmax, jobs=args.jobs)
        for variant, conv in by_variant.items():
            footer.append(f"b_variant={variant}: " + " ".join(f"{k}:{v}" for k, v in conv.items()))
        matching = [v for v, conv in by_variant.items() if conv["q<q_max"] == PRINTED_F4_COUNTS["octagon"]]
        if args.qmax == 10_000:
            footer.append(f"variants reproducing the printed count 625: {', '.join(matching) or 'none'}")
    print(scan.lie_scan_csv(rows, exact=args.format == "exact", footer=footer), end="")
    if args.strict and args.qmax == 10_000 and count != PRINTED_F4_COUNTS[args.mode]:
        return 1
    return 0


def cmd_check_2g2(args) -> int:
    rows = scan.check_2g2(args.mmax, jobs=args.jobs)
    footer = [f"m=1..{args.mmax} all_pass={str(all(r.passes for r in rows)).lower()}"]
    unequal = [r.m for r in rows if not r.a_cubed_equals_bound]
    footer.append("a(points)^3 == 3^(12m+3) for every m" if not unequal
                  else f"a(points)^3 exceeds 3^(12m+3) for m in {unequal}")
    print(scan.ree_csv(rows, exact=args.format == "exact", footer=footer), end="")
    return 0 if all(r.passes for r in rows) else 1


def _pairs(pairs) -> str:
    return " ".join(f"({k},{l})" for k, l in sorted(pairs, key=lambda p: (p[1], p[0])))


def cmd_smallprim(args) -> int:
    rep = bounds.smallprim_report()
    print(f"coarse pairs ({len(rep.coarse)}): {_pairs(rep.coarse)}")
    print(f"exact pairs ({len(rep.exact)}): {_pairs(rep.exact)}")
    for n, ok in rep.mathieu.items():
        print(f"mathieu {n}: |M({n})|^12 >= {n}!/2 {str(ok).lower()}")
    print("n,threshold_holds")
    for n, ok in rep.threshold.items():
        print(f"{n},{str(ok).lower()}")
    print(f"# all_expected={str(rep.ok).lower()}")
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--b-variant", choices=["literal", "full", "a"], default="full")
    common.add_argument("--strict", action="store_true", help="fail on any mismatch with printed values")
    common.add_argument("--format", choices=["csv", "exact"], default="csv")
    common.add_argument("--catalog", metavar="PATH", help="catalog file (default: shipped data)")
    common.add_argument("--jobs", type=_positive, default=1, metavar="N")

    p = argparse.ArgumentParser(prog="gpsieve", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", parents=[common], help="factor a positive integer")
    s.add_argument("n", type=_positive)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("sieve", parents=[common], help="a(n), b_literal(n), b_full(n)")
    s.add_argument("n", type=_positive)
    s.set_defaults(func=cmd_sieve)

    s = sub.add_parser("feasible", parents=[common], help="run the feasibility checks on an order")
    s.add_argument("kind", choices=["hexagon", "octagon"])
    s.add_argument("s", type=_decimal)
    s.add_argument("t", type=_decimal)
    s.set_defaults(func=cmd_feasible)

    s = sub.add_parser("appendix", parents=[common], help="regenerate table B (hexagon) or C (octagon)")
    s.add_argument("table", choices=["B", "C"])
    s.set_defaults(func=cmd_appendix)

    s = sub.add_parser("scan-f4", parents=[common], help="F4(q) point-count scan over prime powers")
    s.add_argument("qmax", type=_positive)
    s.add_argument("mode", choices=["hexagon", "octagon"])
    s.set_defaults(func=cmd_scan_f4)

    s = sub.add_parser("check-2g2", parents=[common], help="Ree group check for q = 3^(2m+1)")
    s.add_argument("mmax", type=_positive)
    s.set_defaults(func=cmd_check_2g2)

    s = sub.add_parser("smallprim", parents=[common], help="pair enumerations, Mathieu and threshold checks")
    s.set_defaults(func=cmd_smallprim)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CatalogError, EvaluationError) as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return 1


def run(argv: list[str]) -> CommandResult:
    """Run a command in-process and capture its stdout."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
    return CommandResult(code, buf.getvalue())


if __name__ == "__main__":
    sys.exit(main())
