"""
Tests for the single-word evaluation tool and its report shape.
"""

import json

from hidden_homfly.tools.evaluation import WordEvaluationTool, evaluate_word, render_factored, render_invariant
from hidden_homfly.tools.ringkit import LaurentA, PolyT, RationalInvariant, Laurent2
from hidden_homfly.tools.skein_f import EvalConfig


def test_render_factored():
    assert render_factored(PolyT([LaurentA({2: 1, 1: 2})])) == "a*(a + 2)"


def test_render_invariant_of_the_unknot():
    text = render_invariant(RationalInvariant.of(Laurent2.monomial(-1, 1), 1))
    assert "x" in text and "a" in text


def test_trefoil_report():
    report = evaluate_word("1 1 1", 2)
    assert report["status"] == "success"
    assert report["tool"] == "evaluate_word"
    assert report["query"]["word"] == [1, 1, 1]
    assert report["query"]["convention"] == "forced"
    summary = report["summary"]
    assert summary["Q_factored"] == "a*(a + 2)"
    assert summary["components"] == 1
    assert summary["degree"] == 0
    assert summary["self_linking"] == 1
    data = report["data"]
    assert data["writhe"] == 3
    assert data["Q"]["coeffs"] == PolyT([LaurentA({2: 1, 1: 2})]).to_json()
    table = data["c_table"]
    assert len(table["entries"]) == table["tmax"] - table["tmin"] + 1
    json.dumps(report)


def test_explicit_table_range():
    report = evaluate_word([], 1, tmin=-2, tmax=2)
    entries = [LaurentA.from_json(e) for e in report["data"]["c_table"]["entries"]]
    inv = LaurentA.monomial(-1)
    assert entries == [LaurentA.zero(), LaurentA.zero(), inv, inv, inv]
    assert report["summary"]["T0"] == "0"


def test_paper_convention_unlink():
    report = evaluate_word("", 2, convention="paper")
    assert report["query"]["convention"] == "paper"
    assert report["summary"]["degree"] == 1
    assert report["summary"]["T0"] == "0"


def test_invalid_word():
    report = evaluate_word("1 4", 3)
    assert report["status"] == "error"
    assert report["error"]["code"] == "INVALID_WORD"
    assert report["data"] is None


def test_invalid_range_and_names():
    assert evaluate_word("1", 2, tmin=3, tmax=1)["error"]["code"] == "INVALID_WORD"
    assert evaluate_word("1", 2, convention="sideways")["error"]["code"] == "INVALID_WORD"


def test_stats_are_opt_in():
    tool = WordEvaluationTool(EvalConfig())
    assert "stats" not in tool.evaluate_word("1 1", 2)["data"]
    stats = tool.evaluate_word("1 1", 2, include_stats=True)["data"]["stats"]
    assert set(stats) == {"seconds", "memo"}
    assert stats["memo"]["hits"] >= 1
