"""
Command line front end.

    python src/main.py poly Q 3                    -> 0 5 0 6
    python src/main.py table B 2 --format csv
    python src/main.py verify --all --profile quick

Polynomials print as space-separated decimal coefficients, lowest degree
first. Exit codes: 0 success, 1 a failed check or exactness assertion,
2 a usage error.
"""

import argparse
import csv
import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

sys.path.insert(0, str(Path(__file__).resolve().parent))

from algebra.polyring import IntPoly  # noqa: E402
from combinatorics.permutations import euler_number  # noqa: E402
from combinatorics.signed import snake_number  # noqa: E402
from config import configure, load_settings  # noqa: E402
from exceptions import (  # noqa: E402
    CacheFormatError,
    EnumerationBoundError,
    InexactDivisionError,
    UnknownCheckError,
)
from polynomials.alternating import Route, compute  # noqa: E402
from tools.table_cache import TableCache  # noqa: E402
from verification.catalog import CATALOG, CHECK_ORDER  # noqa: E402
from verification.models import VerificationReport  # noqa: E402
from verification.runner import run_all  # noqa: E402

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

POLY_FAMILIES = ("A", "B", "Bminus", "Bplus", "P", "Q")
TABLE_FAMILIES = POLY_FAMILIES + ("E", "S")
FIRST_ROW = {"P": 0, "Q": 0}


class UsageError(Exception):
    """Bad flags or arguments detected after parsing."""


def format_plain(poly: IntPoly) -> str:
    return " ".join(str(c) for c in poly.coeffs) if poly.coeffs else "0"


def _coeff_strings(value: Union[IntPoly, int]) -> List[str]:
    if isinstance(value, int):
        return [str(value)]
    return [str(c) for c in value.coeffs] or ["0"]


def compute_entry(family: str, n: int, route: Route = Route.AUTO,
                  cache: Optional[TableCache] = None) -> Union[IntPoly, int]:
    """One table entry, through the cache when the route is automatic."""
    use_cache = cache is not None and route is Route.AUTO
    if use_cache:
        hit = cache.get(family, n)
        if hit is not None:
            return hit
    if family == "E":
        value = euler_number(n)
    elif family == "S":
        value = snake_number(n)
    else:
        value = compute(family, n, route)
    if use_cache:
        cache.put(family, n, value)
    return value


# -- commands ------------------------------------------------------------------

def cmd_poly(args: argparse.Namespace, cache: Optional[TableCache]) -> int:
    if args.n < 0:
        raise UsageError(f"n must be non-negative, got {args.n}")
    value = compute_entry(args.family, args.n, Route(args.route), cache)
    print(format_plain(value))
    return EXIT_OK


def table_rows(family: str, n_max: int, cache: Optional[TableCache] = None) -> Dict[int, List[str]]:
    start = FIRST_ROW.get(family, 1)
    return {n: _coeff_strings(compute_entry(family, n, Route.AUTO, cache)) for n in range(start, n_max + 1)}


def cmd_table(args: argparse.Namespace, cache: Optional[TableCache]) -> int:
    if args.n_max < 0:
        raise UsageError(f"n_max must be non-negative, got {args.n_max}")
    rows = table_rows(args.family, args.n_max, cache)
    if args.format == "json":
        document = {
            "family": args.family,
            "rows": [{"n": n, "coeffs": coeffs} for n, coeffs in rows.items()],
            "version": 1,
        }
        print(json.dumps(document))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, coeffs in rows.items():
            for k, value in enumerate(coeffs):
                writer.writerow([n, k, value])
    elif args.family in ("E", "S"):
        print(" ".join(coeffs[0] for coeffs in rows.values()))
    else:
        for coeffs in rows.values():
            print(" ".join(coeffs))
    return EXIT_OK


def _header(profile: str) -> str:
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return f"# altdesc verify profile={profile} generated={stamp}"


def cmd_verify(args: argparse.Namespace, cache: Optional[TableCache]) -> int:
    if args.schema:
        print(json.dumps(VerificationReport.model_json_schema(), indent=2))
        return EXIT_OK
    if args.all and args.ids:
        raise UsageError("give check ids or --all, not both")
    if not args.all and not args.ids:
        raise UsageError("no checks selected; give check ids or --all")
    check_ids = None if args.all else args.ids
    report = run_all(profile=args.profile, check_ids=check_ids, n_max=args.n_max,
                     order=args.order, cache=cache)

    if args.report == "json":
        if not args.no_header:
            print(_header(args.profile), file=sys.stderr)
        print(report.model_dump_json(indent=2))
    else:
        if not args.no_header:
            print(_header(args.profile))
        print(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altdesc",
        description="Alternating descent polynomials of type A and B: tables, single "
                    "polynomials and identity verification. Polynomials are printed as "
                    "space-separated coefficients from degree 0 upwards.",
    )
    parser.add_argument("--config", help="YAML configuration file (default: configs/default.yaml)")
    parser.add_argument("--enum-bound-a", type=int, help="largest n for enumeration over S_n")
    parser.add_argument("--enum-bound-b", type=int, help="largest n for enumeration over B_n")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="logging level (overrides the configuration)")
    parser.add_argument("--cache", help="table cache file")
    commands = parser.add_subparsers(dest="command", required=True)

    poly = commands.add_parser("poly", help="print one polynomial")
    poly.add_argument("family", choices=POLY_FAMILIES)
    poly.add_argument("n", type=int)
    poly.add_argument("--route", choices=[route.value for route in Route], default="auto",
                      help="brute: enumeration; comb: weight formula or statistics; "
                           "deriv: derivative polynomial substitution; rec: recurrence; "
                           "sets: descent-set formula; auto: the cheapest exact route")
    poly.set_defaults(handler=cmd_poly)

    table = commands.add_parser("table", help="print rows n = start..n_max of a family")
    table.add_argument("family", choices=TABLE_FAMILIES)
    table.add_argument("n_max", type=int)
    table.add_argument("--format", choices=["plain", "json", "csv"], default="plain",
                       help="plain: one row per line (E and S on one line); json: "
                            '{"family", "rows": [{"n", "coeffs"}], "version"}; csv: n,k,value')
    table.set_defaults(handler=cmd_table)

    verify = commands.add_parser("verify", help="run identity checks")
    verify.add_argument("ids", nargs="*", metavar="id", help=f"check ids: {', '.join(CHECK_ORDER)}")
    verify.add_argument("--all", action="store_true", help="run the whole catalog")
    verify.add_argument("--profile", default="quick", help="quick or full (default: quick)")
    verify.add_argument("--report", choices=["text", "json"], default="text")
    verify.add_argument("--n-max", type=int, help="largest n (series checks: the order)")
    verify.add_argument("--order", type=int, help="order of series checks")
    verify.add_argument("--no-header", action="store_true", help="omit the timestamp header line")
    verify.add_argument("--schema", action="store_true", help="print the JSON schema of the report")
    verify.add_argument("--cache", dest="verify_cache", help="table cache file")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _configure_logging(level: str, fmt: str):
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING), format=fmt, stream=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings(args.config)
        settings = settings.with_bounds(type_a=args.enum_bound_a, type_b=args.enum_bound_b)
    except (OSError, ValueError) as exc:
        print(f"altdesc: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    previous = configure(settings)
    _configure_logging(args.log_level or settings.logging.level, settings.logging.format)

    cache_path = getattr(args, "verify_cache", None) or args.cache or settings.cache.path
    try:
        cache = TableCache(cache_path).load() if cache_path else None
        if getattr(args, "ids", None):
            unknown = [check_id for check_id in args.ids if check_id not in CATALOG]
            if unknown:
                raise UnknownCheckError(unknown[0])
        status = args.handler(args, cache)
        if cache is not None and cache.dirty:
            cache.save()
        return status
    except InexactDivisionError as exc:
        print(f"altdesc: exactness assertion failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, UnknownCheckError, EnumerationBoundError, CacheFormatError, ValueError) as exc:
        print(f"altdesc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        configure(previous)


if __name__ == "__main__":
    sys.exit(main())
