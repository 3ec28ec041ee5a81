"""
Tool: single-word evaluation (evaluate_word)

Takes a braid word as text plus an explicit strand count and returns a JSON
serializable report: F_B(α, ξ) as numerator over a power of (1 - ξ²), the
coefficient table c_{B,T}(α) over a T range, the hidden polynomial Q_B(α, T),
the component count, deg_T Q, the empirical T₀, writhe and self-linking.

Output on success:
  {
    "status": "success",
    "tool": "evaluate_word",
    "query": {"word": [...], "strands": n, "convention": "...", "strategy": "...",
              "tmin": ..., "tmax": ...},
    "data": {"F": {...}, "c_table": {...}, "Q": {...}, "components": l, ...},
    "summary": {"Q": "<canonical text>", "Q_factored": "<sympy>", "components": l,
                "degree": d, "T0": ..., "self_linking": sl}
  }

Output on error:
  {"status": "error", "tool": "evaluate_word",
   "error": {"code": "<ERROR_CODE>", "message": "..."}, "data": null}

Error codes:
- "INVALID_WORD": the text or strand count does not describe a braid word.
- "ENGINE_ERROR": a known engine failure (window search exhausted, degree law,
  parity of the series).
- "UNEXPECTED_ERROR": anything else.
"""

import time
import logging
from typing import Any, Dict, Optional, Sequence, Union

import sympy as sp

from .braidword import BraidWord, component_count, self_linking, writhe
from .hidden_q import DegreeLawError, HiddenPolynomial, c_table, recover_Q
from .ringkit import PolyT, RationalInvariant, RingError
from .skein_f import EvalConfig, LeafConvention, SkeinMemo, Strategy, eval_F, get_memo
from .utils.stabilization import StabilizationConfig, StabilizationError
from .utils.word_validator import WordValidationError, braid_from_letters, parse_braid_word

logger = logging.getLogger(__name__)

A, X, T = sp.symbols("a x T")


class EvaluationError(Exception):
    """Raised for engine failures while building a report."""
    pass


def render_factored(poly: PolyT) -> str:
    """Factored form of Q(α, T) via sympy; α prints as ``a``."""
    return str(sp.factor(poly.to_sympy(A, T)))


def render_invariant(value: RationalInvariant) -> str:
    """Simplified F(α, ξ) via sympy; ξ prints as ``x``."""
    return str(sp.factor(value.to_sympy(A, X)))


class WordEvaluationTool:
    """
    Builds evaluation reports for single braid words.
    """

    def __init__(self, cfg: Optional[EvalConfig] = None,
                 stabilization: Optional[StabilizationConfig] = None,
                 memo: Optional[SkeinMemo] = None):
        self.cfg = cfg or EvalConfig()
        self.stabilization = stabilization or StabilizationConfig()
        self.memo = memo

    def evaluate_word(
        self,
        word: Union[str, Sequence[int]],
        strands: int,
        tmin: Optional[int] = None,
        tmax: Optional[int] = None,
        probe_floor: Optional[int] = None,
        include_stats: bool = False,
    ) -> Dict[str, Any]:
        """
        Evaluate one word and build its report.

        Args:
            word: Letters as text or as a sequence of integers
            strands: Explicit strand count
            tmin: First T of the coefficient table (default: probe floor)
            tmax: Last T of the coefficient table (default: end of verified window)
            probe_floor: Lowest T scanned for T₀
            include_stats: Add wall time and memo statistics (not byte-stable)

        Returns:
            Result dict in the success or error shape
        """
        try:
            w = self._parse(word, strands)
        except WordValidationError as e:
            logger.warning(f"Invalid word: {e}")
            return self._create_error_response("INVALID_WORD", str(e))
        if tmin is not None and tmax is not None and tmin > tmax:
            return self._create_error_response("INVALID_WORD", f"empty T range [{tmin}, {tmax}]")

        try:
            logger.info(f"Evaluating [{w}] on {w.strands} strands ({self.cfg.convention.value})")
            started = time.perf_counter()
            report = self._build_report(w, tmin, tmax, probe_floor)
            if include_stats:
                memo = self.memo or get_memo()
                report["data"]["stats"] = {
                    "seconds": round(time.perf_counter() - started, 6),
                    "memo": memo.stats(),
                }
            return report
        except EvaluationError as e:
            logger.error(f"Engine error on [{w}]: {e}")
            return self._create_error_response("ENGINE_ERROR", str(e))
        except Exception as e:
            logger.error(f"Unexpected error during evaluation: {e}")
            return self._create_error_response("UNEXPECTED_ERROR", f"An unexpected error occurred: {e}")

    def _parse(self, word: Union[str, Sequence[int]], strands: int) -> BraidWord:
        if isinstance(word, str):
            return parse_braid_word(word, strands)
        return braid_from_letters(word, strands)

    def _build_report(self, w: BraidWord, tmin: Optional[int], tmax: Optional[int],
                      probe_floor: Optional[int]) -> Dict[str, Any]:
        try:
            value, _ = eval_F(w, self.cfg, self.memo)
            hidden = recover_Q(w, self.cfg, stabilization=self.stabilization,
                               probe_floor=probe_floor, memo=self.memo)
            lo = min(hidden.probe_floor, tmax if tmax is not None else 0) if tmin is None else tmin
            hi = max(hidden.verified_window[1], lo) if tmax is None else tmax
            table = c_table(w, lo, hi, self.cfg, self.memo)
        except (RingError, StabilizationError, DegreeLawError, ValueError) as e:
            raise EvaluationError(str(e))
        return self._create_success_response(w, value, hidden, table)

    def _create_success_response(self, w: BraidWord, value: RationalInvariant,
                                 hidden: HiddenPolynomial, table) -> Dict[str, Any]:
        return {
            "status": "success",
            "tool": "evaluate_word",
            "query": {
                "word": list(w.letters),
                "strands": w.strands,
                "convention": self.cfg.convention.value,
                "strategy": self.cfg.strategy.value,
                "tmin": table.tmin,
                "tmax": table.tmax,
            },
            "data": {
                "F": {**value.to_json(), "text": str(value)},
                "c_table": table.to_json(),
                "Q": hidden.to_json(),
                "components": component_count(w),
                "writhe": writhe(w),
                "self_linking": self_linking(w),
            },
            "summary": {
                "Q": str(hidden.poly),
                "Q_factored": render_factored(hidden.poly),
                "components": hidden.components,
                "degree": hidden.degree,
                "T0": hidden.t0_display,
                "self_linking": self_linking(w),
            },
        }

    def _create_error_response(self, error_code: str, error_message: str) -> Dict[str, Any]:
        return {
            "status": "error",
            "tool": "evaluate_word",
            "error": {
                "code": error_code,
                "message": error_message
            },
            "data": None
        }


def evaluate_word(
    word: Union[str, Sequence[int]],
    strands: int,
    convention: Union[str, LeafConvention] = LeafConvention.FORCED,
    strategy: Union[str, Strategy] = Strategy.STAIRCASE_FIRST,
    tmin: Optional[int] = None,
    tmax: Optional[int] = None,
    probe_floor: Optional[int] = None,
    stabilization: Optional[StabilizationConfig] = None,
    include_stats: bool = False,
) -> Dict[str, Any]:
    """
    Programmatic interface for single-word evaluation.

    Returns:
        Result dict; never raises for bad input
    """
    try:
        cfg = EvalConfig(convention=LeafConvention(convention), strategy=Strategy(strategy))
    except ValueError as e:
        return WordEvaluationTool()._create_error_response("INVALID_WORD", str(e))
    tool = WordEvaluationTool(cfg, stabilization)
    return tool.evaluate_word(word, strands, tmin, tmax, probe_floor, include_stats)
