"""
Tests for the F-engine: leaves, split unions, the recursion and tree replay.
"""

import random
import threading
from concurrent.futures import ThreadPoolExecutor

import pytest

from hidden_homfly.tools.braidword import BraidWord, conway_split
from hidden_homfly.tools.ringkit import Laurent2, RationalInvariant, XI_INV_MINUS_XI, substitute_alpha_to_alphaxi
from hidden_homfly.tools.skein_f import (
    EDGE_LABELS,
    EvalConfig,
    LeafConvention,
    LeafError,
    NodeKind,
    SkeinMemo,
    Strategy,
    TreeRecordError,
    eval_F,
    leaf_unlink,
    replay_tree,
    split_union_combine,
)

ALPHA = Laurent2.monomial(1, 0)
ALPHA_INV = Laurent2.monomial(-1, 0)
ONE_PLUS = Laurent2({(0, 0): 1, (-1, 1): 1})  # 1 + α⁻¹ξ

F_U = RationalInvariant.of(Laurent2.monomial(-1, 1), 1)


def W(n, *letters):
    return BraidWord(n, letters)


def F(w, **kwargs):
    value, _ = eval_F(w, EvalConfig(**kwargs))
    return value


def random_word(rng, max_strands=5, max_length=8):
    n = rng.randint(2, max_strands)
    return W(n, *[rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, max_length))])


def test_leaf_unlink_single_component_agrees():
    assert leaf_unlink(1, LeafConvention.FORCED) == F_U
    assert leaf_unlink(1, LeafConvention.PAPER) == F_U


def test_leaf_unlink_two_components():
    paper = RationalInvariant.of(Laurent2.monomial(-1, 3) * ONE_PLUS, 2)
    forced = RationalInvariant.of(Laurent2.monomial(-1, 1) * ONE_PLUS, 2)
    assert leaf_unlink(2, LeafConvention.PAPER) == paper
    assert leaf_unlink(2, LeafConvention.FORCED) == forced


def test_forced_leaf_solves_the_skein_triple():
    # closure of σ₁ is U, closure of σ₁⁻¹ is the negative stabilization of U
    f_plus = F_U
    f_minus = F_U * Laurent2.monomial(-1, -1, -1)
    f_zero = (f_plus * ALPHA_INV - f_minus * ALPHA) * RationalInvariant.of(Laurent2.monomial(0, 1), 1)
    assert f_zero == leaf_unlink(2, LeafConvention.FORCED)


def test_leaf_unlink_rejects_empty():
    with pytest.raises(LeafError):
        leaf_unlink(0)


def test_split_union_combine():
    assert split_union_combine(F_U, F_U) == leaf_unlink(2, LeafConvention.FORCED)
    assert split_union_combine(F_U, F_U, LeafConvention.PAPER) == leaf_unlink(2, LeafConvention.PAPER)

    f1 = F(W(2, 1, 1, 1))
    assert split_union_combine(f1, F_U) == f1 * RationalInvariant.of(ONE_PLUS, 1)

    left = split_union_combine(split_union_combine(F_U, F_U), F_U)
    right = split_union_combine(F_U, split_union_combine(F_U, F_U))
    assert left == right == leaf_unlink(3, LeafConvention.FORCED)


def test_eval_f_examples():
    assert F(W(1)) == F_U
    assert F(W(2, -1)) == RationalInvariant.of(Laurent2.monomial(-2, 0, -1), 1)
    assert F(W(2, 1, 1, 1)) == F(W(3, 1, 2, 1, 2))


def test_eval_f_unlinks_are_leaves():
    for n in range(1, 5):
        for convention in LeafConvention:
            assert F(W(n), convention=convention) == leaf_unlink(n, convention)


def test_skein_identity_on_random_words():
    rng = random.Random(17)
    for _ in range(40):
        w = random_word(rng)
        position = rng.randrange(len(w))
        switched, smoothed = conway_split(w, position)
        f_plus, f_minus = (F(w), F(switched)) if w.letters[position] > 0 else (F(switched), F(w))
        assert f_plus * ALPHA_INV - f_minus * ALPHA == F(smoothed) * XI_INV_MINUS_XI


def test_negative_stabilization_law():
    rng = random.Random(23)
    for _ in range(25):
        w = random_word(rng, max_strands=4, max_length=6)
        n = w.strands
        stabilized = W(n + 1, *(w.letters + (-n,)))
        assert F(stabilized) == F(w) * Laurent2.monomial(-1, -1, -1)


def test_substituted_values_have_even_xi_grading():
    rng = random.Random(29)
    for _ in range(25):
        w = random_word(rng)
        assert not substitute_alpha_to_alphaxi(F(w)).num.has_odd_xi()


def test_strategies_agree_under_forced_convention():
    for w in (W(2, 1, 1, 1), W(3, -1, 2, -1), W(3, 1, -2, 1, -2), W(4, 1, -3, 2, 2, -1)):
        assert F(w, strategy=Strategy.STAIRCASE_FIRST) == F(w, strategy=Strategy.NEGATIVE_ELIM_FIRST)


def test_memo_is_shared_and_value_independent():
    memo = SkeinMemo()
    w = W(3, 1, 2, 1, 2, 1, 2)
    cold, _ = eval_F(w, EvalConfig(), memo)
    warm, _ = eval_F(w, EvalConfig(), memo)
    unmemoized, _ = eval_F(w, EvalConfig(memo_enabled=False), SkeinMemo())
    assert cold == warm == unmemoized
    assert memo.stats()["hits"] >= 1
    assert len(memo) > 0
    memo.clear()
    assert memo.stats() == {"hits": 0, "misses": 0, "size": 0}


def test_memo_segregates_conventions():
    memo = SkeinMemo()
    forced, _ = eval_F(W(3), EvalConfig(convention=LeafConvention.FORCED), memo)
    paper, _ = eval_F(W(3), EvalConfig(convention=LeafConvention.PAPER), memo)
    assert forced != paper


def test_eval_config_accepts_names():
    cfg = EvalConfig(convention="paper", strategy="negfirst")
    assert cfg.convention is LeafConvention.PAPER
    assert cfg.strategy is Strategy.NEGATIVE_ELIM_FIRST


def test_record_of_negative_stabilization():
    value, record = eval_F(W(2, -1), EvalConfig(record_tree=True))
    assert len(record.nodes) == 2
    root, leaf = record.nodes
    assert root.kind is NodeKind.DESTAB_NEG
    assert root.annotation["label"] == EDGE_LABELS[NodeKind.DESTAB_NEG] == "−α⁻¹ξ⁻¹"
    assert leaf.kind is NodeKind.LEAF and leaf.strands == 1
    assert replay_tree(record) == value == F_U * Laurent2.monomial(-1, -1, -1)


def test_record_of_hopf_link_has_split_root():
    _, record = eval_F(W(2, 1, 1), EvalConfig(record_tree=True))
    root = record.nodes[record.root]
    assert record.root == 0
    assert root.kind is NodeKind.SPLIT
    assert len(root.children) == 2


def test_record_of_unlink_replays_to_leaf():
    for convention in LeafConvention:
        _, record = eval_F(W(2), EvalConfig(convention=convention, record_tree=True))
        assert replay_tree(record) == leaf_unlink(2, convention)


def test_replay_matches_evaluation():
    words = [W(2, 1, 1, 1), W(3, 1, 2, 1, 2), W(3, 1, -2, 1, -2), W(4, 1, 1, 3, -2, 3), W(3, 1, 1)]
    for strategy in Strategy:
        for w in words:
            value, record = eval_F(w, EvalConfig(strategy=strategy, record_tree=True))
            assert replay_tree(record) == value


def test_recorded_trees_are_well_formed():
    _, record = eval_F(W(4, 1, 2, 3, 1, 2, 3, -1), EvalConfig(record_tree=True))
    arity = {NodeKind.LEAF: 0, NodeKind.SPLIT: 2, NodeKind.SPLIT_UNION: 2}
    for node in record.nodes:
        assert len(node.children) == arity.get(node.kind, 1)
        assert all(0 <= c < len(record.nodes) for c in node.children)


def test_replay_rejects_dangling_child():
    _, record = eval_F(W(2, -1), EvalConfig(record_tree=True))
    broken_root = record.nodes[0].model_copy(update={"children": [7]})
    broken = record.model_copy(update={"nodes": [broken_root, record.nodes[1]]})
    with pytest.raises(TreeRecordError):
        replay_tree(broken)


def test_memo_length_waits_for_the_lock():
    memo = SkeinMemo()
    memo.put_if_absent(("key",), F_U)
    sizes = []
    with memo._lock:
        reader = threading.Thread(target=lambda: sizes.append(len(memo)))
        reader.start()
        reader.join(timeout=0.2)
        assert reader.is_alive()
        assert sizes == []
    reader.join(timeout=5)
    assert sizes == [1]


def test_memo_under_concurrent_writers():
    memo = SkeinMemo()
    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(lambda i: (memo.put_if_absent((i % 50,), F_U), len(memo)), range(400)))
    assert len(memo) == 50
