"""
The hidden polynomial Q_B(α, T).

F_B(αξ, ξ) = Σ c_{B,T}(α) ξ^{2T}, and for T large enough c_{B,T} is a
polynomial in T of degree l - 1 (l = number of components). This module
extracts coefficient tables, recovers Q by verified interpolation, reports
the empirical start T₀ of the polynomial regime, and evaluates Q directly on
a computation tree with the difference-operator calculus

    S(g)(T) = α⁻²g(T+1),  S⁻¹(g)(T) = α²g(T-1),  Δ(g)(T) = α(g(T) - g(T-1)),
    Q₊ = S⁻¹Q₋ + ΔQ₀,     Q₋ = SQ₊ - SΔQ₀,
    negative destabilization: p(T) ↦ -α⁻¹p(T+1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Tuple, Union

from .braidword import BraidWord, component_count
from .ringkit import (
    LaurentA,
    PolyT,
    RationalInvariant,
    Scalar,
    binom_poly,
    interpolate,
    series_coefficients,
    substitute_alpha_to_alphaxi,
)
from .skein_f import (
    EvalConfig,
    LeafConvention,
    NodeKind,
    SkeinMemo,
    TreeRecord,
    TreeRecordError,
    eval_F,
    replay_order,
)
from .utils.stabilization import StabilizationConfig, StabilizationManager, search_until_stable

logger = logging.getLogger(__name__)

ALPHA_POLY = LaurentA.monomial(1)
# 1 + α
ONE_PLUS_ALPHA = LaurentA({0: 1, 1: 1})


class DegreeLawError(Exception):
    """Raised when a recovered Q does not have T-degree l - 1."""
    pass


@dataclass(frozen=True)
class CoefficientTable:
    """c_{B,T}(α) for tmin <= T <= tmax."""
    word: BraidWord
    tmin: int
    tmax: int
    entries: Tuple[LaurentA, ...]

    def at(self, t: int) -> LaurentA:
        if not self.tmin <= t <= self.tmax:
            raise IndexError(f"T={t} outside table range [{self.tmin}, {self.tmax}]")
        return self.entries[t - self.tmin]

    def rows(self) -> List[Tuple[int, LaurentA]]:
        return list(zip(range(self.tmin, self.tmax + 1), self.entries))

    def to_json(self) -> Dict[str, object]:
        return {"tmin": self.tmin, "tmax": self.tmax, "entries": [c.to_json() for c in self.entries]}


@dataclass(frozen=True)
class HiddenPolynomial:
    """
    Q_B(α, T) with its provenance. ``empirical_T0`` is None when agreement
    with the coefficient table persisted down to ``probe_floor``.
    """
    poly: PolyT
    components: int
    convention: LeafConvention = LeafConvention.FORCED
    verified_window: Optional[Tuple[int, int]] = None
    empirical_T0: Optional[int] = None
    probe_floor: Optional[int] = None

    @property
    def degree(self) -> Union[int, float]:
        return self.poly.degree

    @property
    def t0(self) -> Union[int, str, None]:
        """T₀, the "<=floor" sentinel when agreement reached the floor, or None if never scanned."""
        if self.empirical_T0 is not None:
            return self.empirical_T0
        if self.probe_floor is not None:
            return f"<={self.probe_floor}"
        return None

    @property
    def t0_display(self) -> str:
        t0 = self.t0
        if t0 is None:
            return "not probed"
        return t0.replace("<=", "<= ") if isinstance(t0, str) else str(t0)

    def to_json(self) -> Dict[str, object]:
        return {
            "components": self.components,
            "coeffs": self.poly.to_json(),
            "T0": self.t0,
            "convention": LeafConvention(self.convention).value,
            "verified_window": list(self.verified_window) if self.verified_window else None,
        }


# --- operator calculus ------------------------------------------------------

def op_S_alpha(p: PolyT) -> PolyT:
    """S_α(g)(T) = α⁻²g(T+1)."""
    return p.shift(1).scale_alpha(-2)


def op_S_alpha_inv(p: PolyT) -> PolyT:
    """S_α⁻¹(g)(T) = α²g(T-1)."""
    return p.shift(-1).scale_alpha(2)


def op_Delta_alpha(p: PolyT) -> PolyT:
    """Δ_α(g)(T) = α(g(T) - g(T-1))."""
    return (p - p.shift(-1)).scale_alpha(1)


def op_negative_destab(p: PolyT) -> PolyT:
    """p(T) ↦ -α⁻¹p(T+1)."""
    return -(p.shift(1).scale_alpha(-1))


def specialize_alpha_one(p: PolyT) -> List[Scalar]:
    """Coefficients of Q(1, T) by T-power."""
    return p.at_alpha_one()


def op_S(p: PolyT) -> PolyT:
    """S at α = 1: g(T) ↦ g(T+1)."""
    return p.shift(1)


def op_Delta(p: PolyT) -> PolyT:
    """Δ at α = 1: g(T) ↦ g(T) - g(T-1)."""
    return p - p.shift(-1)


def skein_from_negative(q_minus: PolyT, q_zero: PolyT) -> PolyT:
    """Q₊ = S⁻¹(Q₋) + Δ(Q₀)."""
    return op_S_alpha_inv(q_minus) + op_Delta_alpha(q_zero)


def skein_from_positive(q_plus: PolyT, q_zero: PolyT) -> PolyT:
    """Q₋ = S(Q₊) - S(Δ(Q₀))."""
    return op_S_alpha(q_plus) - op_S_alpha(op_Delta_alpha(q_zero))


def q_skein_defect(q_plus: PolyT, q_minus: PolyT, q_zero: PolyT) -> PolyT:
    """α⁻¹Q₊(T+1) - αQ₋(T) - (Q₀(T+1) - Q₀(T)); zero when the skein holds."""
    lhs = q_plus.shift(1).scale_alpha(-1) - q_minus.scale_alpha(1)
    return lhs - (q_zero.shift(1) - q_zero)


def leaf_Q(l: int, convention: LeafConvention = LeafConvention.FORCED) -> PolyT:
    """
    Q of the l-component unlink.

    Forced: α⁻¹(1+α⁻¹)^{l-1}·binom(T+l-1, l-1)
    Paper:  α⁻¹(1+α⁻¹)^{l-1}·binom(T, l-1)
    """
    if l < 1:
        raise ValueError(f"unlink needs at least one component, got {l}")
    scale = LaurentA.monomial(-1) * LaurentA({0: 1, -1: 1}) ** (l - 1)
    shift = 0 if LeafConvention(convention) is LeafConvention.PAPER else l - 1
    return binom_poly(shift, l - 1) * scale


# --- coefficient tables and recovery -----------------------------------------

def _substituted(w: BraidWord, cfg: EvalConfig, memo: Optional[SkeinMemo]) -> RationalInvariant:
    value, _ = eval_F(w, replace(cfg, record_tree=False), memo)
    return substitute_alpha_to_alphaxi(value)


def c_table(
    w: BraidWord,
    tmin: int,
    tmax: int,
    cfg: Optional[EvalConfig] = None,
    memo: Optional[SkeinMemo] = None,
) -> CoefficientTable:
    """
    Coefficients c_{B,T}(α) of F_B(αξ, ξ) for tmin <= T <= tmax.

    Raises:
        ValueError: If tmin > tmax
        RingError: If the substituted invariant has an odd ξ-power
    """
    if tmin > tmax:
        raise ValueError(f"empty T range [{tmin}, {tmax}]")
    sub = _substituted(w, cfg or EvalConfig(), memo)
    return CoefficientTable(word=w, tmin=tmin, tmax=tmax,
                            entries=tuple(series_coefficients(sub, tmin, tmax)))


def _fit_window(
    values: Callable[[int, int], List[LaurentA]],
    size: int,
    verify_extra: int,
) -> Callable[[int], Optional[Tuple[PolyT, int]]]:
    """Checker for search_until_stable: interpolate ``size`` points, verify the rest."""

    def checker(start: int) -> Optional[Tuple[PolyT, int]]:
        points = values(start, start + size + verify_extra - 1)
        poly = interpolate(list(zip(range(start, start + size), points[:size])))
        for t, c in zip(range(start + size, start + size + verify_extra), points[size:]):
            if poly(t) != c:
                logger.debug(f"interpolant disagrees with series at T={t}")
                return None
        return poly, start

    return checker


def _scan_T0(sub: RationalInvariant, poly: PolyT, t_lo: int, floor: int) -> Optional[int]:
    """Smallest T >= floor with poly = c on [T, t_lo]; None if agreement reaches the floor."""
    floor = min(floor, t_lo)
    if floor >= t_lo:
        return None
    below = series_coefficients(sub, floor, t_lo - 1)
    for t in range(t_lo - 1, floor - 1, -1):
        if poly(t) != below[t - floor]:
            return t + 1
    return None


def default_probe_floor(w: BraidWord) -> int:
    return -(len(w) + w.strands)


def recover_Q(
    w: BraidWord,
    cfg: Optional[EvalConfig] = None,
    verify_extra: Optional[int] = None,
    stabilization: Optional[StabilizationConfig] = None,
    probe_floor: Optional[int] = None,
    memo: Optional[SkeinMemo] = None,
) -> HiddenPolynomial:
    """
    Recover Q_B by interpolating the coefficient series in its polynomial regime.

    Interpolates l consecutive coefficients starting at T₁ = length + strands,
    verifies against ``verify_extra`` further coefficients, and moves the
    window to larger T on mismatch.

    Args:
        w: The braid word
        cfg: Evaluation config
        verify_extra: Verification points V >= 3 (defaults to the stabilization config)
        stabilization: Window search config
        probe_floor: Lowest T scanned for T₀ (default -(length + strands))
        memo: Memo cache for the F evaluation

    Returns:
        HiddenPolynomial with verified window and empirical T₀

    Raises:
        ValueError: If verify_extra < 3
        StabilizationError: If no window verifies within the attempt budget
        DegreeLawError: If the recovered degree is not l - 1
    """
    cfg = cfg or EvalConfig()
    stabilization = stabilization or StabilizationConfig()
    v = stabilization.verify_extra if verify_extra is None else verify_extra
    if v < 3:
        raise ValueError(f"verify_extra must be at least 3, got {v}")
    l = component_count(w)
    sub = _substituted(w, cfg, memo)

    checker = _fit_window(lambda lo, hi: series_coefficients(sub, lo, hi), l, v)
    manager = StabilizationManager(stabilization)
    poly, start = manager.search_until_stable(checker, len(w) + w.strands)
    if poly.degree != l - 1:
        raise DegreeLawError(f"deg_T Q = {poly.degree} but [{w}] on {w.strands} has {l} components")

    floor = default_probe_floor(w) if probe_floor is None else probe_floor
    # the scan never starts above the verified window
    floor = min(floor, start)
    t0 = _scan_T0(sub, poly, start, floor)
    logger.debug(f"recover_Q [{w}] on {w.strands}: {poly}, T0={t0}, window search {manager.get_stats()}")
    return HiddenPolynomial(poly=poly, components=l, convention=cfg.convention,
                            verified_window=(start, start + l - 1 + v),
                            empirical_T0=t0, probe_floor=floor)


def minimal_T0(
    w: BraidWord,
    cfg: Optional[EvalConfig] = None,
    probe_floor: Optional[int] = None,
    memo: Optional[SkeinMemo] = None,
    recovered: Optional[HiddenPolynomial] = None,
) -> Union[int, str]:
    """
    Smallest T >= probe_floor from which c_{B,T} agrees with Q_B.

    Args:
        recovered: An earlier recover_Q result for ``w``; it is recovered here when absent

    Returns:
        T₀, or "<=floor" when agreement persists to the probe floor
    """
    hidden = recovered or recover_Q(w, cfg, probe_floor=probe_floor, memo=memo)
    return hidden.t0


# --- direct operator engine ----------------------------------------------------

def convolution_poly(q1: PolyT, q2: PolyT, shift: int = 0) -> PolyT:
    """(1+α)·Σ_{s=0}^{T-shift} q1(s)q2(T-shift-s) as a polynomial in T."""
    size = max(0, q1.degree) + max(0, q2.degree) + 2
    points = []
    for m in range(size):
        acc = LaurentA.zero()
        for s in range(m + 1):
            acc = acc + q1(s) * q2(m - s)
        points.append((m, acc))
    return (interpolate(points) * ONE_PLUS_ALPHA).shift(-shift)


UnionRule = Callable[[BraidWord, PolyT, PolyT], PolyT]
LeafRule = Callable[[int], PolyT]


def replay_tree_Q(record: TreeRecord, leaf: LeafRule, union: UnionRule) -> PolyT:
    """
    Walk a computation tree at polynomial level.

    Args:
        record: The tree recorded by eval_F
        leaf: Q of the l-component unlink
        union: Q of a split-union node from its word and the children's Q

    Returns:
        Q at the root

    Raises:
        TreeRecordError: If the record is malformed
    """
    values: Dict[int, PolyT] = {}
    for i in replay_order(record):
        node = record.nodes[i]
        kind = NodeKind(node.kind)
        kids = [values[c] for c in node.children]
        if kind is NodeKind.LEAF:
            values[i] = leaf(node.strands)
        elif kind is NodeKind.SPLIT:
            # children are (switched, smoothed)
            sign = node.annotation.get("sign")
            if sign == -1:
                values[i] = skein_from_positive(kids[0], kids[1])
            elif sign == 1:
                values[i] = skein_from_negative(kids[0], kids[1])
            else:
                raise TreeRecordError(f"split node {i} has no crossing sign")
        elif kind is NodeKind.DESTAB_NEG:
            values[i] = op_negative_destab(kids[0])
        elif kind is NodeKind.SPLIT_UNION:
            values[i] = union(BraidWord(node.strands, tuple(node.word)), kids[0], kids[1])
        else:
            # rewrites and positive destabilizations keep Q
            values[i] = kids[0]
    return values[record.root]


class _ResidualPin:
    """
    Split-union rule of the direct engine: the convolution of the children's
    Q plus a residual of degree <= max(deg Q₁, deg Q₂), the residual fitted
    on one verified window of the node's own coefficient series.
    """

    def __init__(self, cfg: EvalConfig, stabilization: StabilizationConfig, memo: Optional[SkeinMemo]):
        self.cfg = cfg
        self.stabilization = stabilization
        self.memo = memo
        self.shift = 1 if cfg.convention is LeafConvention.PAPER else 0
        self.pins = 0

    def __call__(self, w: BraidWord, q1: PolyT, q2: PolyT) -> PolyT:
        structural = convolution_poly(q1, q2, self.shift)
        size = max(0, q1.degree, q2.degree) + 1
        sub = _substituted(w, self.cfg, self.memo)

        def residuals(lo: int, hi: int) -> List[LaurentA]:
            cs = series_coefficients(sub, lo, hi)
            return [c - structural(t) for t, c in zip(range(lo, hi + 1), cs)]

        checker = _fit_window(residuals, size, self.stabilization.verify_extra)
        residual, start = search_until_stable(checker, len(w) + w.strands, self.stabilization)
        self.pins += 1
        logger.debug(f"pinned split-union [{w}] on {w.strands} at T={start}: residual {residual}")
        return structural + residual


def eval_Q_direct(
    w: BraidWord,
    cfg: Optional[EvalConfig] = None,
    stabilization: Optional[StabilizationConfig] = None,
    memo: Optional[SkeinMemo] = None,
) -> HiddenPolynomial:
    """
    Evaluate Q_B on the computation tree of eval_F with the operator calculus.

    Split-union nodes are completed by the residual pin (one c-series window
    per node); every other node is pure polynomial arithmetic.

    Raises:
        DegreeLawError: If the result does not have T-degree l - 1
    """
    cfg = cfg or EvalConfig()
    stabilization = stabilization or StabilizationConfig()
    # Record the F tree once, then replay it on polynomials
    _, record = eval_F(w, replace(cfg, record_tree=True), memo)
    pin = _ResidualPin(cfg, stabilization, memo)
    poly = replay_tree_Q(record, lambda l: leaf_Q(l, cfg.convention), pin)
    l = component_count(w)
    if poly.degree != l - 1:
        raise DegreeLawError(f"direct engine gave degree {poly.degree} for {l} components on [{w}]")
    logger.debug(f"eval_Q_direct [{w}] on {w.strands}: {poly} ({pin.pins} pins)")
    return HiddenPolynomial(poly=poly, components=l, convention=cfg.convention)


@dataclass(frozen=True)
class TranslationReport:
    """Outcome of evaluating one tree with every leaf translated T ↦ T + shift."""
    shift: int
    original: PolyT
    translated: PolyT
    expected: PolyT
    split_unions: int

    @property
    def law_holds(self) -> bool:
        return self.translated == self.expected

    def to_json(self) -> Dict[str, object]:
        return {
            "shift": self.shift,
            "original": self.original.to_json(),
            "translated": self.translated.to_json(),
            "expected": self.expected.to_json(),
            "split_unions": self.split_unions,
            "law_holds": self.law_holds,
        }


def translate_leaves(
    w: BraidWord,
    shift: int,
    cfg: Optional[EvalConfig] = None,
    stabilization: Optional[StabilizationConfig] = None,
    memo: Optional[SkeinMemo] = None,
) -> TranslationReport:
    """
    Re-evaluate the tree of w with every unlink leaf translated by ``shift``.

    Split-union nodes keep their pinned value, translated the same way. Every
    operator of the calculus commutes with translation, so the output is the
    original Q translated by ``shift``: leaf values cannot be fixed by the
    skein and stabilization relations alone.
    """
    cfg = cfg or EvalConfig()
    stabilization = stabilization or StabilizationConfig()
    _, record = eval_F(w, replace(cfg, record_tree=True), memo)
    pin = _ResidualPin(cfg, stabilization, memo)
    original = replay_tree_Q(record, lambda l: leaf_Q(l, cfg.convention), pin)
    translated = replay_tree_Q(
        record,
        lambda l: leaf_Q(l, cfg.convention).shift(shift),
        lambda word, q1, q2: pin(word, q1.shift(-shift), q2.shift(-shift)).shift(shift),
    )
    unions = sum(1 for n in record.nodes if NodeKind(n.kind) is NodeKind.SPLIT_UNION)
    return TranslationReport(shift=shift, original=original, translated=translated,
                             expected=original.shift(shift), split_unions=unions)
