"""Command line interface.

Subcommands:
    lattice info <file>          rank, signature, determinant, discriminant data
    isometry check <file>        (m, a, disc S) plus the square and corollary checks
    classify verify [--json]     the order five classification table
    kummer ...                   Lefschetz numbers on the Kummer fourfold

Exit codes: 0 all checks pass, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classification
from .isometries import (
    LatticeIsometry,
    check_square_theorem,
    check_unimodular_corollary,
    compute_invariants,
)
from .lattices import (
    discriminant_form,
    discriminant_group,
    is_p_elementary,
    lattice_from_dict,
    signature,
)
from .lefschetz import (
    catalog,
    catalog_variants,
    corollary_value,
    lefschetz_poly_surface,
    lefschetz_q,
    run_catalog_table,
    torus_automorphism,
)
from .matrix import Matrix

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

ELEMENTARY_PRIMES = (2, 3, 5, 7, 23)


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValueError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {path}: line {exc.lineno}: {exc.msg}")


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def cmd_lattice_info(args) -> int:
    lat = lattice_from_dict(_load_json(args.file))
    group = discriminant_group(lat)
    form = discriminant_form(lat)
    payload = {
        "name": lat.name,
        "rank": lat.rank,
        "signature": list(signature(lat)),
        "det": lat.det,
        "disc": lat.disc,
        "discriminant_group": list(group.orders),
        "discriminant_form_q": [_frac_str(q) for q in form.q_values],
        "p_elementary": {
            str(p): {"elementary": flag, "a": a}
            for p, (flag, a) in ((p, is_p_elementary(lat, p)) for p in ELEMENTARY_PRIMES)
        },
    }
    if args.json:
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"name: {lat.name or '(unnamed)'}")
    print(f"rank: {lat.rank}")
    print(f"signature: {tuple(payload['signature'])}")
    print(f"det: {lat.det}  |det|: {lat.disc}")
    if group.is_trivial:
        print("discriminant group: trivial")
    else:
        print("discriminant group: " + " + ".join(f"Z/{d}" for d in group.orders))
        qs = ", ".join(
            f"q(g{i + 1}) = {_frac_str(q)} mod 2Z" for i, q in enumerate(form.q_values)
        )
        print(f"discriminant form: {qs}")
    for p in ELEMENTARY_PRIMES:
        flag, a = is_p_elementary(lat, p)
        note = f"a = {a}" if flag else "no"
        print(f"p-elementary p={p}: {note}")
    return EXIT_OK


def cmd_isometry_check(args) -> int:
    job = _load_json(args.file)
    for key in ("gram", "matrix", "p"):
        if key not in job:
            raise ValueError(f"isometry job needs field {key!r}")
    lat = lattice_from_dict({"gram": job["gram"], "name": job.get("name")})
    iso = LatticeIsometry(lat, Matrix(job["matrix"]), int(job["p"]))
    inv = compute_invariants(iso)
    p = iso.order
    square_ok = check_square_theorem(inv, p) if p != 2 else None
    corollary_ok = (
        check_unimodular_corollary(inv, p, lat) if p != 2 and lat.is_unimodular else None
    )
    payload = {
        "p": p,
        "m": inv.m,
        "a": inv.a,
        "disc_s": inv.disc_s,
        "index": inv.index,
        "square_theorem": square_ok,
        "unimodular_corollary": corollary_ok,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"p = {p}, m = {inv.m}, a = {inv.a}, disc S = {inv.disc_s}, index = {inv.index}")
        if square_ok is None:
            print("square theorem: skipped (p = 2)")
        else:
            print(
                f"square theorem: p^m * disc(S) = {p ** inv.m * inv.disc_s} "
                f"square: {'PASS' if square_ok else 'FAIL'}"
            )
        if corollary_ok is None:
            print("unimodular corollary: skipped (ambient not unimodular or p = 2)")
        else:
            print(f"unimodular corollary: {'PASS' if corollary_ok else 'FAIL'}")
    failed = (square_ok is False) or (corollary_ok is False)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def _row_report_payload(report) -> dict:
    return {
        "m": report.row.m,
        "a": report.row.a,
        "S": report.row.s.name,
        "T": report.row.t.name,
        "checks": report.checks,
        "values": {k: str(v) for k, v in report.values.items()},
        "necessary_conditions_only": report.necessary_conditions_only,
        "pass": report.passed,
    }


def cmd_classify_verify(args, rows=None) -> int:
    report = classification.verify_all(rows=rows)
    payload = {
        "rows": [_row_report_payload(r) for r in report.row_reports],
        "candidate_pairs": [list(p) for p in report.pairs],
        "candidate_pairs_ok": report.pairs_ok,
        "table_pairs_ok": report.table_pairs_ok,
        "complement_53_ok": report.complement_ok,
        "pass": report.passed,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for r in report.row_reports:
            status = "PASS" if r.passed else "FAIL"
            bad = [k for k, v in r.checks.items() if not v]
            extra = f"  failing: {bad}" if bad else ""
            print(f"row (m={r.row.m}, a={r.row.a}): {status}{extra}")
        print(f"candidate pairs: {report.pairs}")
        print(f"candidate pair list matches: {report.pairs_ok}")
        print(f"table pair set matches: {report.table_pairs_ok}")
        print(f"(5,3) complement check: {report.complement_ok}")
        print(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _result_payload(aut, result) -> dict:
    cor = corollary_value(aut)
    l_one = lefschetz_poly_surface(aut.matrix).evaluate_one()
    return {
        "poly_q": {str(e): _frac_str(c) for e, c in sorted(result.polynomial.to_fraction_coeffs().items())},
        "value": result.value,
        "corollary_check": cor == Fraction(l_one) * result.value,
    }


def cmd_kummer(args) -> int:
    if args.table:
        report = run_catalog_table()
        if args.json:
            payload = [
                {
                    "type": e.kind,
                    "variant": e.variant,
                    "value": e.value,
                    "expected": e.expected,
                    "corollary_check": e.corollary_ok,
                    "pass": e.passed,
                }
                for e in report.entries
            ]
            print(json.dumps(payload, indent=2))
        else:
            for e in report.entries:
                status = "PASS" if e.passed else "FAIL"
                print(
                    f"type {e.kind} {e.variant:24s} value = {e.value:>4} "
                    f"expected = {e.expected:>4} {status}"
                )
            print(f"overall: {'PASS' if report.passed else 'FAIL'}")
        return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED

    if args.job:
        job = _load_json(args.job)
        for key in ("H", "b", "n"):
            if key not in job:
                raise ValueError(f"kummer job needs field {key!r}")
        aut = torus_automorphism(Matrix(job["H"]), job["b"], int(job["n"]))
    elif args.type is not None:
        if args.variant is None:
            raise ValueError("--type requires --variant; see kummer --list-variants")
        aut = catalog(args.type, args.variant)
    else:
        raise ValueError("kummer needs either --type/--variant or --job")

    result = lefschetz_q(aut)
    payload = _result_payload(aut, result)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        poly = " + ".join(f"{c}*q^{e}" for e, c in sorted(payload["poly_q"].items(), key=lambda kv: int(kv[0])))
        print(f"L(psi^[n], q) = {poly or '0'}")
        print(f"value at q = 1: {result.value}")
        print(f"corollary check: {'PASS' if payload['corollary_check'] else 'FAIL'}")
    return EXIT_OK if payload["corollary_check"] else EXIT_VERIFICATION_FAILED


def cmd_kummer_list_variants(_args) -> int:
    for kind in range(9):
        print(f"type {kind}: {', '.join(catalog_variants(kind))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummerlat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_lat = sub.add_parser("lattice", help="lattice inspection")
    lat_sub = p_lat.add_subparsers(dest="subcommand", required=True)
    p_info = lat_sub.add_parser("info", help="print invariants of a lattice file")
    p_info.add_argument("file")
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_lattice_info)

    p_iso = sub.add_parser("isometry", help="prime order isometry invariants")
    iso_sub = p_iso.add_subparsers(dest="subcommand", required=True)
    p_check = iso_sub.add_parser("check", help="check an isometry job file")
    p_check.add_argument("file")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_isometry_check)

    p_cls = sub.add_parser("classify", help="order five classification table")
    cls_sub = p_cls.add_subparsers(dest="subcommand", required=True)
    p_verify = cls_sub.add_parser("verify", help="verify every table row")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_classify_verify)

    p_kum = sub.add_parser("kummer", help="Lefschetz numbers on the Kummer fourfold")
    p_kum.add_argument("--type", type=int, choices=range(9))
    p_kum.add_argument("--variant")
    p_kum.add_argument("--job", help="JSON job file with H, b, n")
    p_kum.add_argument("--table", action="store_true", help="run the whole catalog")
    p_kum.add_argument("--json", action="store_true")
    p_kum.add_argument("--list-variants", action="store_true")
    p_kum.set_defaults(func=cmd_kummer)
    return parser


def _fold_variant_value(argv):
    # variant names may start with '-' (e.g. "-h"); fold them into --variant=...
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--variant" and i + 1 < len(argv):
            out.append(f"--variant={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_fold_variant_value(list(argv)))
    if getattr(args, "list_variants", False):
        return cmd_kummer_list_variants(args)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
