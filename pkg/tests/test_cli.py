import json
import os

import pytest

from lcdlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_family_json(capsys):
    code, out = run(capsys, "family", "--k", "4", "--s", "4", "--t", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["measured"]["n"] == 34 and rep["measured"]["d"] == 17
    assert rep["measured"]["is_lcd"] is True and rep["match"] is True


def test_family_emits_symbolic_parts(capsys):
    code, out = run(capsys, "family", "--k", "4", "--s", "2", "--t", "1",
                    "--emit", "all", "--json")
    rep = json.loads(out)
    assert rep["gram_det_coefficients"] == [1, -32, -96, 512, 1280]
    assert {"multiplicity": 8, "exponent": "8t"} in rep["symbolic_weight_enumerator"]
    assert len(rep["generator_rows"]) == 4


def test_bounds_json(capsys):
    code, out = run(capsys, "bounds", "--n", "24", "--k", "12", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["lcd_known"] == 6
    code, out = run(capsys, "bounds", "--n", "22", "--k", "4", "--json")
    rep = json.loads(out)
    assert rep["griesmer"] == 11 and rep["closed_form"] == 11
    assert rep["lcd_known"] == 10


def test_verify_octal(capsys):
    code, out = run(capsys, "verify-octal", "--table", "m-table")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_verify_octal_all(capsys):
    code, out = run(capsys, "verify-octal", "--table", "all")
    assert code == 0
    assert out.count("PASS") == 45 and "FAIL" not in out


def test_search_cli(capsys):
    code, out = run(capsys, "search", "--n", "17", "--k", "4", "--d", "8",
                    "--seed", "1", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["found"] is True and rep["measured"]["is_lcd"] is True
    code, out = run(capsys, "search", "--n", "22", "--k", "4", "--d", "11",
                    "--seed", "1", "--iters", "2000", "--restarts", "20",
                    "--json")
    assert code == 1
    assert json.loads(out)["found"] is False


def test_classify_and_census_cli(capsys, tmp_path):
    db = str(tmp_path / "db")
    code, out = run(capsys, "classify", "--n", "21", "--k", "3", "--d", "12",
                    "--db", db, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["count"] == 1 and rep["lcd_count"] == 0
    assert os.path.exists(os.path.join(db, "n21k3d12.codedb"))
    assert os.path.exists(os.path.join(db, "manifest-classify.json"))
    code, out = run(capsys, "census", "--n", "21", "--k", "3", "--d", "12",
                    "--db", db, "--json")
    assert code == 0
    assert json.loads(out)["count"] == 1


def test_env_overrides_db(capsys, tmp_path, monkeypatch):
    env_db = str(tmp_path / "env")
    monkeypatch.setenv("LCDLAB_DB", env_db)
    code, _ = run(capsys, "classify", "--n", "8", "--k", "3", "--d", "3",
                  "--db", str(tmp_path / "flag"), "--json")
    assert code == 0
    assert os.path.exists(os.path.join(env_db, "n8k3d3.codedb"))
    assert not os.path.exists(str(tmp_path / "flag"))


def test_reproduce_bounds_suite(capsys):
    code, out = run(capsys, "reproduce", "--suite", "bounds")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 2


def test_manifest_digest_reproducible(capsys, tmp_path):
    digests = []
    for sub in ("a", "b"):
        db = str(tmp_path / sub)
        code, _ = run(capsys, "reproduce", "--suite", "bounds", "--db", db)
        assert code == 0
        manifest = json.loads(
            (tmp_path / sub / "manifest-reproduce.json").read_text())
        digests.append(manifest["digest"])
        assert manifest["parameters"] == {"suite": "bounds", "full": False}
    assert digests[0] == digests[1]


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
