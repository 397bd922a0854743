import json

from kummerlat.cli import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    main,
)


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


H5 = {"name": "H5", "gram": [[2, 1], [1, -2]]}
A4M_GRAM = [[-2, 1, 0, 0], [1, -2, 1, 0], [0, 1, -2, 1], [0, 0, 1, -2]]
C5 = [[0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]]


def test_lattice_info(tmp_path, capsys):
    path = _write(tmp_path, "h5.json", H5)
    assert main(["lattice", "info", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "rank: 2" in out
    assert "signature: (1, 1)" in out
    assert "Z/5" in out


def test_lattice_info_json(tmp_path, capsys):
    path = _write(tmp_path, "h5.json", H5)
    assert main(["lattice", "info", path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["rank"] == 2
    assert payload["disc"] == 5
    assert payload["p_elementary"]["5"] == {"elementary": True, "a": 1}


def test_lattice_info_unimodular(tmp_path, capsys):
    path = _write(tmp_path, "u.json", {"gram": [[0, 1], [1, 0]]})
    assert main(["lattice", "info", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "|det|: 1" in out
    assert "discriminant group: trivial" in out


def test_lattice_info_rejects_asymmetric(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", {"gram": [[0, 1], [2, 0]]})
    assert main(["lattice", "info", path]) == EXIT_INPUT_ERROR
    assert "symmetric" in capsys.readouterr().err


def test_isometry_check(tmp_path, capsys):
    path = _write(tmp_path, "iso.json", {"gram": A4M_GRAM, "matrix": C5, "p": 5})
    assert main(["isometry", "check", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "m = 1, a = 0, disc S = 5" in out
    assert "square: PASS" in out


def test_isometry_check_json(tmp_path, capsys):
    path = _write(tmp_path, "iso.json", {"gram": A4M_GRAM, "matrix": C5, "p": 5})
    assert main(["isometry", "check", path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "p": 5,
        "m": 1,
        "a": 0,
        "disc_s": 5,
        "index": 1,
        "square_theorem": True,
        "unimodular_corollary": None,
    }


def test_isometry_check_rejects_identity(tmp_path, capsys):
    eye = [[1, 0], [0, 1]]
    path = _write(tmp_path, "iso.json", {"gram": [[0, 1], [1, 0]], "matrix": eye, "p": 2})
    assert main(["isometry", "check", path]) == EXIT_INPUT_ERROR
    assert "order must be prime, matrix != identity" in capsys.readouterr().err


def test_isometry_check_rejects_non_isometry(tmp_path, capsys):
    bad = [[1, 1], [0, 1]]
    path = _write(tmp_path, "iso.json", {"gram": [[0, 1], [1, 0]], "matrix": bad, "p": 2})
    assert main(["isometry", "check", path]) == EXIT_INPUT_ERROR
    assert "not an isometry" in capsys.readouterr().err


def test_classify_verify(capsys):
    assert main(["classify", "verify"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("PASS") >= 9
    assert "overall: PASS" in out


def test_classify_verify_json(capsys):
    assert main(["classify", "verify", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True
    assert len(payload["rows"]) == 8
    assert payload["candidate_pairs_ok"] is True
    assert all(r["necessary_conditions_only"] for r in payload["rows"])


def test_classify_verify_corrupted_rows_exit_code(capsys):
    from argparse import Namespace

    from kummerlat.classification import ClassificationRow, table_rows
    from kummerlat.cli import cmd_classify_verify

    rows = table_rows()
    corrupted = rows[:7] + [ClassificationRow(5, 3, rows[7].s, rows[0].t)]
    rc = cmd_classify_verify(Namespace(json=False), rows=corrupted)
    assert rc == EXIT_VERIFICATION_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_kummer_catalog_entry(capsys):
    assert main(["kummer", "--type", "0", "--variant", "id"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "value at q = 1: 108" in out


def test_kummer_negative_variant(capsys):
    assert main(["kummer", "--type", "8", "--variant", "-h"]) == EXIT_OK
    assert "value at q = 1: 5" in capsys.readouterr().out


def test_kummer_job_roundtrip(tmp_path, capsys):
    job = {"H": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], "b": [1, 0, 0, 0], "n": 3}
    path = _write(tmp_path, "job.json", job)
    assert main(["kummer", "--job", path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["value"] == 27
    assert payload["corollary_check"] is True
    assert payload["poly_q"]["4"] == "27"


def test_kummer_table(capsys):
    assert main(["kummer", "--table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "overall: PASS" in out
    assert out.count("PASS") == 40  # 39 entries plus the overall line


def test_kummer_missing_args(capsys):
    assert main(["kummer"]) == EXIT_INPUT_ERROR
    assert "either --type/--variant or --job" in capsys.readouterr().err


def test_kummer_bad_variant(capsys):
    assert main(["kummer", "--type", "3", "--variant", "zzz"]) == EXIT_INPUT_ERROR
    assert "unknown variant" in capsys.readouterr().err


def test_kummer_list_variants(capsys):
    assert main(["kummer", "--list-variants"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "type 8" in out


def test_missing_file_is_input_error(capsys):
    assert main(["lattice", "info", "/does/not/exist.json"]) == EXIT_INPUT_ERROR
    assert "no such file" in capsys.readouterr().err


def test_invalid_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["lattice", "info", str(path)]) == EXIT_INPUT_ERROR
    assert "invalid JSON" in capsys.readouterr().err
