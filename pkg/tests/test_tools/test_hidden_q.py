"""
Tests for Q recovery, the operator calculus and the direct engine.
"""

import random
import time
from fractions import Fraction

import pytest

from hidden_homfly.tools.braidword import BraidWord, conway_split
from hidden_homfly.tools.hidden_q import (
    HiddenPolynomial,
    c_table,
    convolution_poly,
    eval_Q_direct,
    leaf_Q,
    minimal_T0,
    op_Delta,
    op_negative_destab,
    op_S,
    q_skein_defect,
    recover_Q,
    skein_from_negative,
    skein_from_positive,
    specialize_alpha_one,
    translate_leaves,
)
from hidden_homfly.tools.ringkit import LaurentA, PolyT
from hidden_homfly.tools.skein_f import EvalConfig, LeafConvention, SkeinMemo, eval_F

ONE_PLUS_INV = LaurentA({0: 1, -1: 1})
UNLINK2_SCALE = LaurentA.monomial(-1) * ONE_PLUS_INV


def W(n, *letters):
    return BraidWord(n, letters)


def Q(w, convention=LeafConvention.FORCED):
    return recover_Q(w, EvalConfig(convention=convention))


def test_leaf_q_values():
    for convention in LeafConvention:
        assert leaf_Q(1, convention) == PolyT([LaurentA.monomial(-1)])
    assert leaf_Q(2, LeafConvention.FORCED) == PolyT([1, 1]) * UNLINK2_SCALE
    assert leaf_Q(2, LeafConvention.PAPER) == PolyT([0, 1]) * UNLINK2_SCALE


def test_leaf_q_three_components_is_binomial():
    # binom(T+2, 2) = (T² + 3T + 2) / 2
    scale = LaurentA.monomial(-1) * ONE_PLUS_INV ** 2
    expected = PolyT([1, Fraction(3, 2), Fraction(1, 2)]) * scale
    assert leaf_Q(3) == expected
    with pytest.raises(ValueError):
        leaf_Q(0)


def test_c_table_of_the_unknot():
    table = c_table(W(1), -2, 2)
    inv = LaurentA.monomial(-1)
    assert list(table.entries) == [LaurentA.zero(), LaurentA.zero(), inv, inv, inv]
    assert table.at(0) == inv
    with pytest.raises(IndexError):
        table.at(3)
    with pytest.raises(ValueError):
        c_table(W(1), 2, 1)


def test_recover_q_examples():
    assert Q(W(1)).poly == PolyT([LaurentA.monomial(-1)])
    assert Q(W(2, 1, 1, 1)).poly == PolyT([LaurentA({2: 1, 1: 2})])
    assert Q(W(2, -1)).poly == PolyT([LaurentA.monomial(-2, -1)])


def test_recover_q_unlink_under_both_conventions():
    assert Q(W(2)).poly == leaf_Q(2, LeafConvention.FORCED)
    assert Q(W(2), LeafConvention.PAPER).poly == leaf_Q(2, LeafConvention.PAPER)


def test_degree_is_components_minus_one():
    for w, l in [(W(2, 1, 1), 2), (W(3), 3), (W(3, 1, 2, 1, 2), 1), (W(3, 1, 1, -2, -2), 3)]:
        hidden = Q(w)
        assert hidden.components == l
        assert hidden.degree == l - 1


def test_empirical_t0():
    assert Q(W(1)).empirical_T0 == 0
    assert Q(W(2, -1)).empirical_T0 == -1
    assert Q(W(2)).empirical_T0 == -1
    assert Q(W(2), LeafConvention.PAPER).empirical_T0 == 0
    assert minimal_T0(W(1)) == 0


def test_t0_display_when_agreement_reaches_the_floor():
    hidden = HiddenPolynomial(poly=PolyT([1]), components=1, probe_floor=-4)
    assert hidden.t0_display == "<= -4"
    assert hidden.to_json()["T0"] == "<=-4"
    assert HiddenPolynomial(poly=PolyT([1]), components=1).t0_display == "not probed"


def test_recover_q_rejects_small_verification():
    with pytest.raises(ValueError):
        recover_Q(W(1), verify_extra=2)


def test_q_level_skein_relation():
    rng = random.Random(5)
    for _ in range(12):
        n = rng.randint(2, 4)
        w = W(n, *[rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 5))])
        position = rng.randrange(len(w))
        switched, smoothed = conway_split(w, position)
        q_w, q_sw, q_sm = Q(w).poly, Q(switched).poly, Q(smoothed).poly
        q_plus, q_minus = (q_w, q_sw) if w.letters[position] > 0 else (q_sw, q_w)
        assert q_skein_defect(q_plus, q_minus, q_sm).is_zero()
        assert skein_from_negative(q_minus, q_sm) == q_plus
        assert skein_from_positive(q_plus, q_sm) == q_minus


def test_negative_destabilization_operator():
    for w in (W(1), W(2, 1, 1, 1), W(2, 1, 1), W(3, 1, -2, 1)):
        stabilized = W(w.strands + 1, *(w.letters + (-w.strands,)))
        assert Q(stabilized).poly == op_negative_destab(Q(w).poly)


def test_alpha_one_specialization():
    trefoil = Q(W(2, 1, 1, 1)).poly
    assert specialize_alpha_one(trefoil) == [3]
    p = PolyT([1, 2])
    assert op_S(p) == PolyT([3, 2])
    assert op_Delta(p) == PolyT([2])


def test_convolution_of_unknots_is_the_unlink():
    unknot = leaf_Q(1)
    assert convolution_poly(unknot, unknot) == leaf_Q(2, LeafConvention.FORCED)
    assert convolution_poly(unknot, unknot, shift=1) == leaf_Q(2, LeafConvention.PAPER)


def test_direct_engine_examples():
    paper = EvalConfig(convention=LeafConvention.PAPER)
    assert eval_Q_direct(W(2, 1, 1), paper).poly == PolyT([LaurentA({1: -1, 0: -1}), LaurentA({1: 1, 0: 1})])
    assert eval_Q_direct(W(3)).poly == leaf_Q(3)


@pytest.mark.parametrize("convention", list(LeafConvention))
def test_direct_engine_agrees_with_interpolation(convention):
    cfg = EvalConfig(convention=convention)
    for w in (W(2, 1, 1, 1), W(2, -1, -1), W(3, 1, 2, 1, 2), W(3, 1, -2, 1, -2), W(3, 1, 1, 2, 2), W(4, 1, 3)):
        assert eval_Q_direct(w, cfg).poly == recover_Q(w, cfg).poly


def test_leaf_translation_shifts_the_result():
    report = translate_leaves(W(3, 1, 1, 2), 2)
    assert report.law_holds
    assert report.translated != report.original
    assert report.to_json()["shift"] == 2


def test_scan_floor_is_clamped_to_the_window_start():
    hidden = recover_Q(W(1), probe_floor=100)
    start = hidden.verified_window[0]
    assert hidden.probe_floor == start
    assert hidden.empirical_T0 is None
    assert hidden.t0_display == f"<= {start}"
    assert minimal_T0(W(1), probe_floor=100) == f"<={start}"


def test_minimal_t0_reuses_a_recovered_polynomial():
    hidden = Q(W(2, -1))
    assert minimal_T0(W(2, -1), recovered=hidden) == hidden.t0 == -1
    assert minimal_T0(W(2, -1)) == -1


@pytest.mark.parametrize("k", range(1, 16))
def test_two_strand_powers_are_fast(k):
    w = W(2, *[1] * k)
    memo = SkeinMemo()
    started = time.perf_counter()
    eval_F(w, EvalConfig(), memo)
    hidden = recover_Q(w, EvalConfig(), memo=memo)
    assert time.perf_counter() - started < 1.0
    assert hidden.degree == (1 if k % 2 == 0 else 0)
