#!/usr/bin/env python3
"""Run the prime order isometry property checks over the constructed pool."""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kummerlat.isometries import (  # noqa: E402
    check_square_theorem,
    check_unimodular_corollary,
    compute_invariants,
)
from kummerlat.pool import extended_pool  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--count", type=int, default=220)
    args = parser.parse_args()

    failures = 0
    for entry in extended_pool(seed=args.seed, count=args.count):
        iso = entry.isometry
        inv = compute_invariants(iso)
        checks = {"a<=m": inv.a <= inv.m}
        if iso.order != 2:
            checks["square"] = check_square_theorem(inv, iso.order)
            if iso.lattice.is_unimodular:
                checks["corollary"] = check_unimodular_corollary(inv, iso.order, iso.lattice)
        bad = [k for k, v in checks.items() if not v]
        if bad:
            failures += 1
            print(f"FAIL {entry.name}: {bad} (m={inv.m}, a={inv.a}, discS={inv.disc_s})")
    print(f"pool size: {args.count}, failures: {failures}")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
