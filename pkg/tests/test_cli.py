import json

import pytest

from nlhive.cli import bundled_corpora, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nl_empty_triple(capsys):
    code, out, _ = run(capsys, "nl", "", "", "")
    assert code == 0
    assert out.splitlines()[0] == "1"


def test_lr_zero_with_oracle(capsys):
    code, out, _ = run(capsys, "lr", "1", "1", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0"
    assert lines[1] == "provenance: hive enumeration; oracle check: agree"


def test_lr_worked_value(capsys):
    code, out, _ = run(capsys, "lr", "6,5,3", "6,4,1", "9,7,5,4")
    assert code == 0
    assert out.splitlines()[0] == "7"
    assert "oracle check: agree" in out


def test_nl_method_selection(capsys):
    for method in ("hive", "lrsum", "ct"):
        code, out, _ = run(capsys, "nl", "5,3", "4,1", "5,2",
                           "--method", method)
        assert code == 0
        assert out.splitlines()[0] == "6"
        assert f"method: {method}" in out


def test_usage_bad_partition(capsys):
    code, _, err = run(capsys, "nl", "1,2", "1", "1")
    assert code == 1
    assert "error:" in err


def test_usage_unknown_method(capsys):
    code, _, _ = run(capsys, "nl", "1", "1", "2", "--method", "bogus")
    assert code == 1


def test_usage_no_command(capsys):
    assert run(capsys, )[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_budget_exceeded_exit(capsys):
    code, _, err = run(capsys, "nl", "9,7,5", "8,6,2", "9,5,3",
                       "--budget-nodes", "50")
    assert code == 2
    assert "budget exceeded" in err


def test_json_format(capsys):
    code, out, _ = run(capsys, "nl", "5,3", "4,1", "5,2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 6
    assert payload["mu"] == [5, 3]


def test_csv_format(capsys):
    code, out, _ = run(capsys, "lr", "1", "1", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "value,oracle"
    assert lines[1] == "1,agree"


def test_env_format_override(capsys, monkeypatch):
    monkeypatch.setenv("NLHIVE_FORMAT", "json")
    code, out, _ = run(capsys, "nl", "", "", "")
    assert code == 0
    assert json.loads(out)["value"] == 1
    # an explicit flag always beats the environment
    code, out, _ = run(capsys, "nl", "", "", "", "--format", "text")
    assert out.splitlines()[0] == "1"


def test_env_invalid_budget_rejected(capsys, monkeypatch):
    monkeypatch.setenv("NLHIVE_BUDGET_NODES", "0")
    code, _, err = run(capsys, "nl", "", "", "")
    assert code == 1
    assert "error:" in err


def test_gf_expand(capsys):
    code, out, _ = run(capsys, "gf", "--numerator", "1,0,11,0,7",
                       "--d2", "4", "--tmax", "8")
    assert code == 0
    assert "series: 1, 0, 15, 0, 61, 0, 158, 0, 325" in out


def test_stretch_command(capsys):
    code, out, _ = run(capsys, "stretch", "5,3", "4,1", "5,2", "--tmax", "10")
    assert code == 0
    assert "sequence: 1, 6, 19, 43, 82, 139, 218, 322, 455, 620, 821" in out
    assert "gf  (3w^2+3w+1)/((1-w)^3(1-w^2))" in out


def test_stretch_window_too_small(capsys):
    code, _, err = run(capsys, "stretch", "5,3", "4,1", "5,2", "--tmax", "3")
    assert code == 1
    assert "error:" in err


def test_conjectures_command(capsys):
    code, out, _ = run(capsys, "conjectures", "1,1", "1,1", "1,1")
    assert code == 0
    assert "premise not met" in out


def test_weyl_value(capsys):
    code, out, _ = run(capsys, "weyl", "B", "3", "2,1,1", "2,1,1", "2,1,1")
    assert code == 0
    assert out.splitlines()[0] == "4"


def test_stability_command(capsys):
    code, out, _ = run(capsys, "stability", "3,3", "2,1", "3,2",
                       "--a-start", "0", "--a-stop", "2",
                       "--degree-bound", "3")
    assert code == 0
    assert "a=0:" in out and "a=2:" in out
    assert "even:" in out and "odd:" in out


def _write_corpus(path, rows):
    path.write_text(json.dumps(
        {"table_id": "tmp-corpus", "description": "test corpus",
         "rows": rows}))


def test_golden_tmp_pass_and_skip(tmp_path, capsys):
    corpus = tmp_path / "tiny.json"
    _write_corpus(corpus, [
        {"label": "easy", "kind": "value", "op": "nl",
         "mu": [2], "nu": [1], "la": [1], "expect": 1},
        {"label": "audited", "kind": "value", "op": "nl",
         "mu": [2], "nu": [1], "la": [1], "expect": 99,
         "known_discrepancy": "recorded value is a known misprint"},
    ])
    code, out, _ = run(capsys, "golden", str(corpus))
    assert code == 0
    assert "[PASS] tiny.json tmp-corpus/easy" in out
    assert "[SKIP] tiny.json tmp-corpus/audited" in out
    assert "computed 1, recorded 99" in out
    assert "1 pass, 1 skip, 0 fail" in out


def test_golden_tmp_failure(tmp_path, capsys):
    corpus = tmp_path / "bad.json"
    _write_corpus(corpus, [
        {"label": "wrong", "kind": "value", "op": "nl",
         "mu": [2], "nu": [1], "la": [1], "expect": 7},
    ])
    code, out, _ = run(capsys, "golden", str(corpus))
    assert code == 3
    assert "[FAIL] bad.json tmp-corpus/wrong" in out
    assert "0 pass, 0 skip, 1 fail" in out


def test_golden_empty_corpus_vacuous(tmp_path, capsys):
    corpus = tmp_path / "empty.json"
    _write_corpus(corpus, [])
    code, out, _ = run(capsys, "golden", str(corpus))
    assert code == 0
    assert "vacuous" in out
    assert "empty corpus passes vacuously" in out


def test_golden_unknown_corpus(capsys):
    code, _, err = run(capsys, "golden", "no-such-table.json")
    assert code == 1
    assert "error:" in err


def test_golden_json_format(tmp_path, capsys):
    corpus = tmp_path / "tiny.json"
    _write_corpus(corpus, [
        {"label": "easy", "kind": "value", "op": "lr",
         "mu": [1], "nu": [1], "la": [2], "expect": 1},
    ])
    code, out, _ = run(capsys, "golden", str(corpus), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["tally"] == {"PASS": 1, "SKIP": 0, "FAIL": 0}


def test_bundled_corpora_listing():
    names = [entry.name for entry in bundled_corpora()]
    assert names == sorted(names)
    assert "worked_examples.json" in names
    assert "3131.json" in names
    assert len(names) == 8
