"""CLI surface: exit codes, report files, determinism."""

import json

import pytest

from hopfrb import __version__
from hopfrb.cli import main
from hopfrb.exactlin import RATIONAL
from hopfrb.catalog import get
from hopfrb.cli import parse_operator


# -- list ---------------------------------------------------------------------


def test_list_includes_every_entry(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "mat2-rational  algebra" in out
    assert "weak-pair-groupoid  weak-hopf" in out
    assert len(out.strip().splitlines()) == 34


def test_list_kind_filter(capsys):
    assert main(["list", "--kind", "weak-hopf"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["weak-pair-groupoid  weak-hopf", "weak-two-point  weak-hopf"]


def test_list_empty_filter_is_fine(capsys):
    assert main(["list", "--kind", "frobnicator"]) == 0
    assert capsys.readouterr().out == ""


# -- check exit codes ---------------------------------------------------------


def test_check_rb_operator_pass():
    assert main(["check", "rb-operator", "--algebra", "mat2-rational",
                 "--op", "proj:E11", "--weight", "-1"]) == 0


def test_check_rb_operator_fail_with_witness(capsys):
    rc = main(["check", "rb-operator", "--algebra", "mat2-rational",
               "--op", "leftmul:E12", "--weight", "-1"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "fail" in out and "witness" in out


def test_check_rbp_module_instance():
    assert main(["check", "rbp-module", "--instance", "doubled-mat2",
                 "--weight", "-1"]) == 0
    assert main(["check", "rbp-module", "--instance", "doubled-mat2",
                 "--weight", "3"]) == 1


def test_check_usage_errors(capsys):
    cases = [
        ["check", "frobnicate", "--entry", "mat2-rational"],
        ["check", "rb-operator", "--algebra", "mat2-rational"],  # no --op
        ["check", "rb-operator", "--algebra", "no-such", "--op", "id"],
        ["check", "hopf", "--entry", "mat2-rational"],  # kind mismatch
        ["check", "rb-operator", "--algebra", "mat2-rational", "--op", "proj:E12"],
        ["check", "rb-operator", "--algebra", "mat2-rational", "--op", "warp:E11"],
        ["check", "rb-operator", "--algebra", "mat2-rational", "--op", "id",
         "--weight", "1/0"],
    ]
    for argv in cases:
        assert main(argv) == 2, argv
        assert capsys.readouterr().err.startswith("error:")


def test_check_structure_entries():
    assert main(["check", "hopf", "--entry", "group-algebra-c2"]) == 0
    assert main(["check", "weak-hopf", "--entry", "weak-pair-groupoid"]) == 0
    assert main(["check", "quantum-commutative", "--entry", "weak-two-point"]) == 0
    assert main(["check", "quantum-commutative", "--entry", "weak-pair-groupoid"]) == 1


def test_check_generic_verdict_drives_exit():
    base = ["check", "generic", "--module", "c2-regular-module", "--seed", "3",
            "--trials", "20"]
    assert main(base + ["--op", "scalar:0"]) == 0
    assert main(base + ["--op", "scalar:2"]) == 1


def test_check_structure_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "kind": "algebra", "name": "bad", "dim": 2, "basis": ["x", "y"],
        "mult": [{"i": 0, "j": 0, "k": 1, "c": "1"},
                 {"i": 0, "j": 1, "k": 0, "c": "1"}],
    }))
    assert main(["check", "algebra", "--entry", f"@{bad}"]) == 1
    capsys.readouterr()
    junk = tmp_path / "junk.json"
    junk.write_text("{oops")
    assert main(["check", "algebra", "--entry", f"@{junk}"]) == 2


def test_check_report_file(tmp_path):
    out = tmp_path / "rep.json"
    rc = main(["check", "rb-operator", "--algebra", "mat2-rational",
               "--op", "proj:E11", "--report", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["version"] == __version__
    assert doc["check"] == "rb-operator"
    assert "seed" in doc
    assert doc["result"] == "pass"


# -- operator literals --------------------------------------------------------


def test_matrix_literal(tmp_path):
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps([["1/2", "1/2"], ["1/2", "1/2"]]))
    c2 = get("group-algebra-c2").payload.algebra
    m = parse_operator(f"matrix:@{mfile}", c2)
    assert m[0][0] == RATIONAL.parse("1/2")
    rc = main(["check", "generic", "--module", "c2-regular-module",
               "--op", f"matrix:@{mfile}", "--trials", "10", "--seed", "1"])
    assert rc == 0


def test_matrix_literal_shape_checked(tmp_path):
    mfile = tmp_path / "m.json"
    mfile.write_text(json.dumps([[1, 2, 3]]))
    assert main(["check", "rb-operator", "--algebra", "group-algebra-c2",
                 "--op", f"matrix:@{mfile}"]) == 2


# -- replay -------------------------------------------------------------------


def test_replay_single_suite(tmp_path, capsys):
    out = tmp_path / "r.json"
    rc = main(["replay", "thm-3.2", "--trials", "50", "--seed", "7",
               "--report", str(out)])
    assert rc == 0
    assert "thm-3.2: pass" in capsys.readouterr().out
    doc = json.loads(out.read_text())
    assert doc["seed"] == "7" and doc["trials"] == 50
    assert doc["version"] == __version__


def test_replay_unknown_id(capsys):
    assert main(["replay", "prop-9.9"]) == 2
    assert "unknown theorem id" in capsys.readouterr().err


def test_replay_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        main(["replay", "prop-3.6", "--seed", "11", "--trials", "10",
              "--report", str(path)])
    assert a.read_bytes() == b.read_bytes()


def test_replay_seed_env_default(tmp_path, monkeypatch, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    monkeypatch.setenv("HOPFRB_SEED", "42")
    main(["replay", "thm-3.5", "--trials", "5", "--report", str(a)])
    monkeypatch.delenv("HOPFRB_SEED")
    main(["replay", "thm-3.5", "--seed", "42", "--trials", "5", "--report", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_replay_negative_trials_rejected(capsys):
    assert main(["replay", "thm-3.2", "--trials", "-1"]) == 2


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
