from kummerlat.classification import (
    EXCLUDED_PAIRS,
    EXPECTED_PAIRS,
    ClassificationRow,
    ambient_lattice,
    candidate_pairs,
    complement_form_target,
    table_rows,
    verify_53_complement,
    verify_all,
    verify_row,
)
from kummerlat.lattices import (
    direct_sum,
    discriminant_form,
    discriminant_group,
    fqf_isomorphic,
    make_standard,
    signature,
)


def test_ambient_lattice_shape():
    amb = ambient_lattice()
    assert amb.rank == 23
    assert signature(amb) == (3, 20)
    assert amb.disc == 2


def test_table_has_eight_rows_with_expected_pairs():
    rows = table_rows()
    assert len(rows) == 8
    pairs = sorted((r.m, r.a) for r in rows)
    assert pairs == sorted(set(EXPECTED_PAIRS) - set(EXCLUDED_PAIRS))


def test_row_1_1_and_5_3_entries():
    rows = {(r.m, r.a): r for r in table_rows()}
    assert rows[(1, 1)].s.name == "U + H5"
    assert rows[(1, 1)].t.name == "E8(-1) + E8(-1) + H5 + <-2>"
    assert rows[(5, 3)].t.name == "U(5) + <-10>"


def test_every_row_verifies():
    for row in table_rows():
        report = verify_row(row)
        assert report.passed, (row.m, row.a, report.checks)
        assert report.values["rank_s"] + report.values["rank_t"] == 23
        # |D_T| = 2 |D_S| row by row
        assert discriminant_group(row.t).order == 2 * discriminant_group(row.s).order


def test_candidate_pairs_match():
    pairs = candidate_pairs()
    assert tuple(pairs) == EXPECTED_PAIRS
    assert len(pairs) == 10
    assert (5, 3) in pairs and (4, 0) in pairs
    assert (5, 5) not in pairs  # 23 - 20 = 3 < 5


def test_synthetic_bad_rows_fail():
    rows = {(r.m, r.a): r for r in table_rows()}
    base = rows[(2, 2)]
    bad_parity = ClassificationRow(2, 1, base.s, base.t)
    assert not verify_row(bad_parity).checks["parity"]
    swapped = ClassificationRow(1, 1, base.s, base.t)
    report = verify_row(swapped)
    assert not report.passed
    assert not report.checks["rank_s"]


def test_verify_53_complement():
    assert verify_53_complement()
    target = complement_form_target()
    assert fqf_isomorphic(target, target)
    too_small = direct_sum(make_standard("U(5)"), make_standard("<-2>"))
    assert not fqf_isomorphic(discriminant_form(too_small), target)


def test_verify_all_report():
    report = verify_all()
    assert report.passed
    assert report.pairs_ok and report.table_pairs_ok and report.complement_ok
    assert all(r.necessary_conditions_only for r in report.row_reports)


def test_verify_all_with_corrupted_table():
    rows = table_rows()
    bad = rows[:7] + [ClassificationRow(5, 3, rows[7].s, rows[0].t)]
    report = verify_all(rows=bad)
    assert not report.passed


def test_44_row_presentation_probe():
    # two presentations of the (4, 4) coinvariant block agree on signature,
    # determinant, and discriminant form
    l1 = direct_sum(make_standard("U(5)"), make_standard("A4(-1)"))
    l2 = direct_sum(make_standard("U"), make_standard("A4*(-5)"))
    assert signature(l1) == signature(l2)
    assert l1.det == l2.det
    assert fqf_isomorphic(discriminant_form(l1), discriminant_form(l2))
