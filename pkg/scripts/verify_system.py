"""
System verification: the full identity profile, then the n = 8 type B
route-agreement benchmark under a raised enumeration bound.

    python scripts/verify_system.py [--skip-benchmark] [--benchmark-n 8]
"""

import argparse
import logging
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from algebra.polyring import IntPoly  # noqa: E402
from config import configure, get_settings  # noqa: E402
from polynomials.alternating import (  # noqa: E402
    b_hat_bruteforce,
    b_hat_combinatorial,
    b_hat_diff_recurrence,
    b_hat_recurrence_rows,
    b_hat_via_descent_sets,
    b_hat_via_q,
    clear_caches,
)
from verification.runner import run_all  # noqa: E402

logger = logging.getLogger("verify_system")


def type_b_benchmark(n: int) -> bool:
    """Every route to B_n against enumeration of B_n, with the bound raised to n."""
    previous = configure(get_settings().with_bounds(type_a=max(n, get_settings().enumeration.type_a),
                                                    type_b=n))
    clear_caches()
    try:
        started = time.perf_counter()
        expected = b_hat_bruteforce(n)
        logger.info(f"enumerated B_{n} ({2 ** n} * {n}! elements) in {time.perf_counter() - started:.1f}s")
        routes = {
            "comb": b_hat_combinatorial(n),
            "deriv": b_hat_via_q(n),
            "rec": IntPoly(b_hat_recurrence_rows(n)[n]),
            "diff": b_hat_diff_recurrence(n),
            "sets": b_hat_via_descent_sets(n),
        }
    finally:
        configure(previous)
        clear_caches()
    ok = True
    for name, poly in routes.items():
        agrees = poly == expected
        ok = ok and agrees
        print(f"  B_{n} route {name:<6} {'agrees' if agrees else 'DIFFERS'}")
    print(f"  B_{n} = {expected}")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the full verification profile and the type B benchmark.")
    parser.add_argument("--skip-benchmark", action="store_true")
    parser.add_argument("--benchmark-n", type=int, default=8)
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    print("Full verification profile")
    started = time.perf_counter()
    report = run_all(profile="full")
    print(report.to_text())
    print(f"  finished in {time.perf_counter() - started:.1f}s")

    ok = report.ok
    if not args.skip_benchmark:
        print(f"\nType B route agreement at n = {args.benchmark_n}")
        started = time.perf_counter()
        ok = type_b_benchmark(args.benchmark_n) and ok
        print(f"  finished in {time.perf_counter() - started:.1f}s")

    print("\nSYSTEM OK" if ok else "\nSYSTEM FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
