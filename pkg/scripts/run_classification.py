#!/usr/bin/env python3
"""Verify every row of the order five classification table and print a report."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kummerlat.classification import verify_all  # noqa: E402


def main() -> int:
    report = verify_all()
    for r in report.row_reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"row (m={r.row.m}, a={r.row.a})  S = {r.row.s.name}  T = {r.row.t.name}")
        for check, ok in r.checks.items():
            print(f"    {check:28s} {'ok' if ok else 'FAIL'}")
        print(f"    => {status}")
    print(f"candidate pairs ({len(report.pairs)}): {report.pairs}")
    print(f"candidate list matches: {report.pairs_ok}")
    print(f"shipped pair set matches: {report.table_pairs_ok}")
    print(f"(5,3) complement check: {report.complement_ok}")
    print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
