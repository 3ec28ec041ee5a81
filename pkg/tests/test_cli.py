"""
Tests for the command-line surface.
"""

import json

import pytest

from hidden_homfly.cli import EXIT_FAILURE, EXIT_INPUT, EXIT_OK, build_parser, main


def test_eval_text(capsys):
    assert main(["eval", "--word", "1 1 1", "--strands", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "a*(a + 2)" in out
    assert "components   1" in out


def test_eval_json_with_stats(capsys):
    assert main(["eval", "--word", "-1", "--strands", "2", "--emit", "json", "--stats"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["summary"]["T0"] == "-1"
    assert "stats" in report["data"]


def test_eval_to_file(tmp_path, capsys):
    out = tmp_path / "reports" / "hopf.txt"
    assert main(["eval", "--word", "1,1", "--strands", "2", "--out", str(out)]) == EXIT_OK
    assert "deg_T Q      1" in out.read_text(encoding="utf-8")
    assert capsys.readouterr().out == ""


def test_eval_invalid_word(capsys):
    assert main(["eval", "--word", "1 5", "--strands", "3"]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_invalid_verification_count():
    assert main(["eval", "--word", "1", "--strands", "2", "--verify-extra", "2"]) == EXIT_INPUT


def test_unknown_convention_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["eval", "--word", "1", "--strands", "2", "--convention", "sideways"])


@pytest.mark.parametrize("convention", ["forced", "paper"])
def test_table(capsys, convention):
    assert main(["table", "--kmin", "-2", "--kmax", "2", "--convention", convention, "--emit", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["convention"] == convention
    assert payload["mismatches"] == []
    assert [row["n"] for row in payload["rows"]] == [-2, -1, 0, 1, 2]


def test_table_empty_range():
    assert main(["table", "--kmin", "3", "--kmax", "1"]) == EXIT_INPUT


def test_tree_dot(tmp_path):
    out = tmp_path / "tree.gv"
    assert main(["tree", "--word", "1 2 1 2", "--strands", "3", "--format", "dot", "--out", str(out)]) == EXIT_OK
    assert out.read_text(encoding="utf-8").startswith("digraph tree {")


def test_tree_json(capsys):
    assert main(["tree", "--word", "-1", "--strands", "2"]) == EXIT_OK
    record = json.loads(capsys.readouterr().out)
    assert record["root"] == 0
    assert len(record["nodes"]) == 2


def test_verify(tmp_path, capsys):
    code = main(["verify", "--suite", "degree", "--suite", "parity", "--seed", "2", "--cases", "4",
                 "--max-strands", "3", "--max-length", "4", "--out", str(tmp_path)])
    assert code == EXIT_OK
    table = capsys.readouterr().out
    assert "degree" in table and "parity" in table
    assert "seconds" not in table
    report = json.loads((tmp_path / "degree-forced.json").read_text(encoding="utf-8"))
    assert report["failures"] == []
    assert "wall_time" not in report


def test_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("unknot ; 1 ; ; 1/a\ntrefoil ; 2 ; 1 1 1 ; a*(a+2)\n", encoding="utf-8")
    assert main(["corpus", str(corpus)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert [json.loads(line)["matches"] for line in lines] == [True, True]


def test_corpus_mismatch_and_output_file(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("trefoil ; 2 ; 1 1 1 ; a\n", encoding="utf-8")
    out = tmp_path / "results.jsonl"
    assert main(["corpus", str(corpus), "--out", str(out)]) == EXIT_FAILURE
    assert json.loads(out.read_text(encoding="utf-8"))["status"] == "mismatch"


def test_corpus_missing_file(tmp_path):
    assert main(["corpus", str(tmp_path / "missing.txt")]) == EXIT_INPUT
