"""
Tests for tree serialization to JSON and DOT.
"""

import pytest

from hidden_homfly.tools.braidword import BraidWord
from hidden_homfly.tools.integrations.tree_export import (
    TreeExportError,
    export_tree,
    from_json,
    kind_counts,
    to_dot,
    to_json,
    write_tree,
)
from hidden_homfly.tools.skein_f import EvalConfig, TreeRecordError, eval_F, replay_tree


def record_of(strands, *letters):
    _, record = eval_F(BraidWord(strands, letters), EvalConfig(record_tree=True))
    return record


def test_json_is_stable_and_replayable():
    record = record_of(3, 1, -2, 1, -2)
    text = to_json(record)
    assert text == to_json(record_of(3, 1, -2, 1, -2))
    restored = from_json(text)
    assert restored == record
    assert replay_tree(restored) == replay_tree(record)


def test_from_json_rejects_garbage():
    with pytest.raises(TreeRecordError):
        from_json('{"nodes": "none"}')
    with pytest.raises(TreeRecordError):
        from_json("not json")


def test_dot_output():
    record = record_of(2, -1)
    dot = to_dot(record)
    assert dot.startswith("digraph tree {")
    assert dot.rstrip().endswith("}")
    assert '"0" -> "1" [label="−α⁻¹ξ⁻¹"' in dot
    assert "shape=box" in dot
    q_dot = to_dot(record, level="Q")
    assert "−α⁻¹·(T↦T+1)" in q_dot


def test_split_edges_are_labelled():
    dot = export_tree(record_of(2, 1, 1), "dot")
    assert 'label="α²"' in dot
    assert 'label="α(ξ⁻¹−ξ)"' in dot


def test_unknown_format():
    with pytest.raises(TreeExportError):
        export_tree(record_of(1), "svg")


def test_write_tree_and_counts(tmp_path):
    record = record_of(2, 1, 1)
    path = write_tree(record, tmp_path / "out" / "tree.gv", fmt="dot")
    assert path.read_text(encoding="utf-8").startswith("digraph")
    counts = kind_counts(record)
    assert counts["split"] == 1
    assert sum(counts.values()) == len(record.nodes)
