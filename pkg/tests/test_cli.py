import json

import pytest

from qdu_typeb_hecke.Hecke.poset_modules import module_MBP
from qdu_typeb_hecke.Harness import cli
from qdu_typeb_hecke.Harness.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main

VEE = [(1, 0), (-2, 0), (0, -1), (0, 2)]


def test_help(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "qdu-typeb" in capsys.readouterr().out


def test_bad_usage(capsys, poset_file):
    assert main([]) == EXIT_USAGE
    assert main(["check", "hecke"]) == EXIT_USAGE
    assert main(["check", "relations", "--n", "9"]) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


def test_missing_and_malformed_files(tmp_path, capsys, poset_file):
    assert main(["kbp", str(tmp_path / "missing.json")]) == EXIT_USAGE
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert main(["kbp", str(broken)]) == EXIT_USAGE
    assert main(["kbp", str(poset_file(2, [(1, 2), (2, 1)]))]) == EXIT_USAGE


def test_extensions(capsys, poset_file):
    path = poset_file(2, VEE)
    assert main(["extensions", str(path), "--format", "json"]) == EXIT_OK
    records = json.loads(capsys.readouterr().out)
    assert [r["window"] for r in records] == ["[-1,2]", "[2,-1]"]
    assert [r["composition"] for r in records] == ["(0,2)", "(1,1)"]


def test_kbp(capsys, poset_file):
    path = str(poset_file(2, VEE))
    assert main(["kbp", path]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "F^B[(0,2)] + F^B[(1,1)]"
    assert main(["kbp", path, "--basis", "monomial"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2*M^B[(0,1,1)] + M^B[(0,2)] + M^B[(1,1)]"


def test_interval(capsys, poset_file):
    assert main(["interval", str(poset_file(2, VEE))]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "sigma_P = [-1,2]\nrho_P = [2,-1]"
    loop = str(poset_file(1, [(-1, 1)], name="loop.json"))
    assert main(["interval", loop]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "not regular: not distinguished at (1,)"
    assert main(["interval", loop, "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"regular": False, "witness": [1]}


def test_check(capsys):
    assert main(["check", "distinguished", "--n", "1", "--format", "json"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert rows and all(row["status"] == "pass" for row in rows)


def test_failed_check(capsys, monkeypatch):
    failing = [{"case": "relations n=1", "status": "fail", "details": {"trace": ["quadratic"]}}]
    monkeypatch.setattr(cli, "run_suite", lambda name, ctx: failing)
    assert main(["check", "relations"]) == EXIT_FAILED
    assert "first failure" in capsys.readouterr().out


def test_export(capsys, tmp_path, poset_file):
    path = str(poset_file(2, VEE))
    assert main(["export", path]) == EXIT_OK
    assert '"0" -> "2"' in capsys.readouterr().out.splitlines()
    out = tmp_path / "vee.dot"
    assert main(["export", path, "--module", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert '"[-1,2]" -> "[2,-1]" [label="π̄1"]' in out.read_text().splitlines()


def test_export_of_a_module_dump(capsys, tmp_path, vee_2):
    dump = tmp_path / "module.json"
    module_MBP(vee_2).to_json(dump)
    assert main(["export", str(dump)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert '"[-1,2]" -> "[-1,2]" [label="π̄0" style=dashed]' in lines
    assert main(["export", str(dump), "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["basis"] == ["[-1,2]", "[2,-1]"]
