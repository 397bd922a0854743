#!/usr/bin/env python3
"""Reproduce the Lefschetz number table for every catalog automorphism."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kummerlat.lefschetz import (  # noqa: E402
    catalog,
    corollary_value,
    lefschetz_poly_surface,
    lefschetz_q,
    run_catalog_table,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", action="store_true", help="also print the q polynomials")
    args = parser.parse_args()

    report = run_catalog_table()
    for entry in report.entries:
        status = "PASS" if entry.passed else "FAIL"
        print(
            f"type {entry.kind} {entry.variant:24s} value = {entry.value:>4} "
            f"expected = {entry.expected:>4} corollary = {entry.corollary_ok} {status}"
        )
        if args.poly:
            aut = catalog(entry.kind, entry.variant)
            res = lefschetz_q(aut)
            coeffs = dict(sorted(res.polynomial.to_fraction_coeffs().items()))
            print(f"    L(q) = {coeffs}")
            print(f"    L(psi, 1) = {lefschetz_poly_surface(aut.matrix).evaluate_one()}, "
                  f"corollary value = {corollary_value(aut)}")
    print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
