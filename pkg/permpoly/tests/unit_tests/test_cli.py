import json

import pytest

from permpoly.__main__ import main


def test_verify_conj1(capsys):
    assert main(["verify", "conj1", "--k", "3"]) == 0
    assert "PP over F_125: true" in capsys.readouterr().out


def test_verify_conj1_refuses_even_k():
    assert main(["verify", "conj1", "--k", "2"]) == 2


def test_forced_conj1_hits_a_pole():
    assert main(["verify", "conj1", "--k", "2", "--force"]) == 1


def test_verify_conj2(capsys, tmp_path):
    out = tmp_path / "conj2.jsonl"
    assert main(["verify", "conj2", "--k", "2", "--out", str(out)]) == 0
    assert "PP over mu_26 in F_625: true" in capsys.readouterr().out
    report = json.loads(out.read_text())
    assert report["is_pp"] and report["closure"]


def test_verify_trace():
    assert main(["verify", "trace", "--r", "2"]) == 0


def test_verify_trace_rejects_small_r():
    assert main(["verify", "trace", "--r", "1"]) == 2


def test_verify_example(capsys):
    assert main(["verify", "example", "--id", "5.4"]) == 0
    assert "16/16 passed" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["--k", "2"], ["--k", "1"], ["--r", "2"], ["--k", "3", "--suite", "conj1"]])
def test_verify_lemmas(argv):
    assert main(["verify", "lemmas"] + argv) == 0


def test_lemma_suite_failure_exit_code():
    assert main(["verify", "lemmas", "--k", "2", "--suite", "conj1"]) == 1


def test_decompose_mu(capsys):
    assert main(["decompose", "mu", "--k", "2"]) == 0
    assert "sizes: 13 / 13" in capsys.readouterr().out


def test_search_and_reverify(tmp_path, capsys):
    out, csv_path = tmp_path / "search.jsonl", tmp_path / "search.csv"
    argv = ["search", "trace", "--max-order", "49", "--fields", "7,1,2", "--jobs", "1"]
    assert main(argv + ["--out", str(out), "--csv", str(csv_path)]) == 0
    lines = out.read_text().splitlines()
    assert "header" in json.loads(lines[0])
    assert len(csv_path.read_text().splitlines()) == len(lines)
    assert "example-5.1" in capsys.readouterr().out
    assert main(["verify", "records", "--input", str(out)]) == 0


def test_search_with_config(test_data, tmp_path):
    out = tmp_path / "search.jsonl"
    assert main(["search", "trace", "--config", str(test_data / "search_config.yaml"), "--out", str(out)]) == 0
    records = [json.loads(line) for line in out.read_text().splitlines()[1:]]
    assert {tuple(r["field"][key] for key in ("p", "j", "n")) for r in records} == {(3, 2, 2)}


def test_search_niho(capsys):
    assert main(["search", "niho", "--k", "1", "--jobs", "1"]) == 0
    assert "permutation trinomial(s)" in capsys.readouterr().out


def test_unknown_flag_is_a_usage_error():
    with pytest.raises(SystemExit) as error:
        main(["verify", "conj1", "--k", "3", "--bogus"])
    assert error.value.code == 2
