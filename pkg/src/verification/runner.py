"""
Runs catalog checks and assembles reports.

A run is hermetic: enumeration caches are cleared and a fresh derivative
polynomial table is installed (or the one supplied, e.g. a table with an
injected fault), then the previous state is restored. A TableCache primes
the P/Q table and receives the entries computed during the run.
"""

import logging
import time
from contextlib import contextmanager
from typing import Iterable, List, Optional

from algebra.polyring import IntPoly
from config import Settings, configure, get_settings
from exceptions import DegreeOverflowError, EnumerationBoundError, InexactDivisionError
from polynomials import alternating
from polynomials.derivative import DerivativePolynomialTable, install_table
from tools.table_cache import Family, TableCache
from verification.catalog import CHECK_ORDER, CheckContext, CheckFailure, Scale, entry
from verification.models import CheckStatus, IdentityCheck, VerificationReport, Witness

logger = logging.getLogger(__name__)


@contextmanager
def hermetic(settings: Optional[Settings] = None,
             tables: Optional[DerivativePolynomialTable] = None,
             cache: Optional[TableCache] = None):
    """Isolate one verification run from memo state left by earlier work."""
    previous_settings = configure(settings) if settings is not None else None
    table = tables if tables is not None else DerivativePolynomialTable()
    if cache is not None and tables is None:
        for family in ("P", "Q"):
            for n, poly in sorted(cache.entries(family).items()):
                table.inject(family, n, poly)
    previous_table = install_table(table)
    alternating.clear_caches()
    try:
        yield table
    finally:
        if cache is not None and tables is None:
            for family, polys in table.snapshot().items():
                for n, poly in enumerate(polys):
                    cache.put(Family(family), n, poly)
        install_table(previous_table)
        alternating.clear_caches()
        if settings is not None:
            configure(previous_settings)


def _context(check_id: str, profile: str, n_min: Optional[int], n_max: Optional[int],
             order: Optional[int]) -> CheckContext:
    settings = get_settings()
    ranges = settings.profile(profile)
    # a profile also caps the enumeration bounds
    bound_a = min(settings.enumeration.type_a, ranges.type_a)
    bound_b = min(settings.enumeration.type_b, ranges.type_b)
    check = entry(check_id)
    if check.scale is Scale.SERIES:
        order = order if order is not None else (n_max if n_max is not None else ranges.series_order)
        if order < 1:
            raise ValueError(f"series order must be >= 1, got {order}")
        return CheckContext(n_min=0, n_max=order, bound_a=bound_a, bound_b=bound_b, order=order)

    default_max = {
        Scale.TYPE_A: ranges.type_a,
        Scale.TYPE_B: ranges.type_b,
        Scale.FORMULA: ranges.formula,
    }[check.scale]
    n_min = check.n_min if n_min is None else n_min
    n_max = default_max if n_max is None else n_max
    if n_min < check.n_min:
        raise ValueError(f"{check_id} starts at n = {check.n_min}, got n_min = {n_min}")
    if n_max < n_min:
        raise ValueError(f"{check_id}: n_max = {n_max} is below n_min = {n_min}")
    return CheckContext(n_min=n_min, n_max=n_max, bound_a=bound_a, bound_b=bound_b)


def _params(scale: Scale, ctx: CheckContext) -> dict:
    if scale is Scale.SERIES:
        return {"order": ctx.order, "x_order": ctx.x_order}
    return {"n_min": ctx.n_min, "n_max": ctx.n_max}


def _skip_reason(scale: Scale, ctx: CheckContext) -> Optional[str]:
    if scale is Scale.TYPE_A and ctx.n_max > ctx.bound_a:
        return f"n_max = {ctx.n_max} exceeds the type A enumeration bound {ctx.bound_a}"
    if scale is Scale.TYPE_B and ctx.n_max > ctx.bound_b:
        return f"n_max = {ctx.n_max} exceeds the type B enumeration bound {ctx.bound_b}"
    return None


def _execute(check_id: str, profile: str, n_min: Optional[int], n_max: Optional[int],
             order: Optional[int]) -> IdentityCheck:
    check = entry(check_id)
    ctx = _context(check_id, profile, n_min, n_max, order)
    params = _params(check.scale, ctx)
    reason = _skip_reason(check.scale, ctx)
    if reason:
        logger.info(f"{check_id}: skipped ({reason})")
        return IdentityCheck(id=check_id, params=params, status=CheckStatus.SKIPPED, reason=reason)

    started = time.perf_counter()
    try:
        check.run(ctx)
        result = IdentityCheck(id=check_id, params=params, status=CheckStatus.PASS)
    except CheckFailure as failure:
        result = IdentityCheck(id=check_id, params=params, status=CheckStatus.FAIL, witness=failure.witness)
    except InexactDivisionError as exc:
        witness = Witness(n=exc.n if exc.n is not None else ctx.n_min, detail=f"exact division failed: {exc}")
        result = IdentityCheck(id=check_id, params=params, status=CheckStatus.FAIL, witness=witness)
    except DegreeOverflowError as exc:
        witness = Witness(n=exc.n if exc.n is not None else ctx.n_min, detail=f"degree window exceeded: {exc}")
        result = IdentityCheck(id=check_id, params=params, status=CheckStatus.FAIL, witness=witness)
    except EnumerationBoundError as exc:
        result = IdentityCheck(id=check_id, params=params, status=CheckStatus.SKIPPED, reason=str(exc))
    elapsed = time.perf_counter() - started
    logger.info(f"{check_id}: {result.status.value} in {elapsed:.3f}s")
    return result


def run(check_id: str, n_min: Optional[int] = None, n_max: Optional[int] = None,
        order: Optional[int] = None, profile: str = "quick", settings: Optional[Settings] = None,
        tables: Optional[DerivativePolynomialTable] = None,
        cache: Optional[TableCache] = None) -> IdentityCheck:
    """
    Run one catalog check.

    Args:
        check_id: catalog id, e.g. "pan1" or "my2".
        n_min, n_max: range of n (defaults from the profile and the check).
        order: z-order of series checks (defaults to n_max, then the profile).
        profile: "quick" or "full".
        settings: configuration to use instead of the active one.
        tables: derivative polynomial table to run against.
        cache: table cache supplying and receiving P/Q entries.

    Returns:
        IdentityCheck: status with witness or skip reason.

    Raises:
        UnknownCheckError: check_id is not in the catalog.
        ValueError: an invalid range or profile.
    """
    entry(check_id)
    with hermetic(settings, tables, cache):
        return _execute(check_id, profile, n_min, n_max, order)


def run_all(profile: str = "quick", check_ids: Optional[Iterable[str]] = None,
            n_max: Optional[int] = None, order: Optional[int] = None,
            settings: Optional[Settings] = None, tables: Optional[DerivativePolynomialTable] = None,
            cache: Optional[TableCache] = None) -> VerificationReport:
    """Run the selected checks (all by default) in catalog order, sharing one hermetic session."""
    selected = list(CHECK_ORDER) if check_ids is None else list(check_ids)
    for check_id in selected:
        entry(check_id)
    wanted = set(selected)
    checks: List[IdentityCheck] = []
    started = time.perf_counter()
    with hermetic(settings, tables, cache):
        for check_id in CHECK_ORDER:
            if check_id in wanted:
                checks.append(_execute(check_id, profile, None, n_max, order))
    report = VerificationReport(profile=profile, checks=checks)
    tally = report.counts()
    logger.info(f"profile {profile}: {tally['pass']} passed, {tally['fail']} failed, "
                f"{tally['skipped']} skipped in {time.perf_counter() - started:.2f}s")
    return report


def faulty_table(family: str, n: int, position: int, delta: int = 1) -> DerivativePolynomialTable:
    """A derivative table whose entry (family, n) has coefficient ``position`` shifted by ``delta``."""
    table = DerivativePolynomialTable()
    original = table.get(family, n)
    coeffs = list(original.padded(max(len(original.coeffs), position + 1)))
    coeffs[position] += delta
    table.inject(family, n, IntPoly(tuple(coeffs)))
    return table
