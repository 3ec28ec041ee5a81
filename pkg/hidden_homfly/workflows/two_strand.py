"""
Two-strand tables: Q for the braids σ₁ⁿ on 2 strands.

Odd powers close up to knots with Q = kα^{2k} + (k+1)α^{2k-1} (n = 2k+1);
even powers are 2-component links with Q = α^{2k-1}(1+α⁻¹)(T - k) under the
paper leaf convention and (T - k + 1) under the forced one (n = 2k). Rows are
also checked against the recurrence

    Q_n(T) = α²Q_{n-2}(T-1) + α(Q_{n-1}(T) - Q_{n-1}(T-1)).
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..tools.braidword import BraidWord
from ..tools.hidden_q import minimal_T0, op_Delta_alpha, recover_Q
from ..tools.ringkit import LaurentA, PolyT
from ..tools.skein_f import EvalConfig, LeafConvention, SkeinMemo
from ..tools.utils.stabilization import StabilizationConfig
from ..tools.evaluation import render_factored

logger = logging.getLogger(__name__)

ONE_PLUS_ALPHA_INV = LaurentA({0: 1, -1: 1})


def two_strand_word(n: int) -> BraidWord:
    """σ₁ⁿ on 2 strands; n = 0 is the 2-component unlink."""
    return BraidWord(2, (1 if n > 0 else -1,) * abs(n))


def closed_form(n: int, convention: LeafConvention = LeafConvention.FORCED) -> PolyT:
    """Expected Q for σ₁ⁿ under the given leaf convention."""
    k, odd = divmod(n, 2)
    if odd:
        return PolyT([LaurentA({2 * k: k, 2 * k - 1: k + 1})])
    # even: α^{2k-1}(1+α⁻¹)(T - k + offset)
    offset = 1 if LeafConvention(convention) is LeafConvention.FORCED else 0
    scale = ONE_PLUS_ALPHA_INV.shift(2 * k - 1)
    return PolyT([-k + offset, 1]) * scale


def recurrence_rhs(q_prev2: PolyT, q_prev1: PolyT) -> PolyT:
    """α²Q_{n-2}(T-1) + α(Q_{n-1}(T) - Q_{n-1}(T-1))."""
    return q_prev2.shift(-1).scale_alpha(2) + op_Delta_alpha(q_prev1)


@dataclass
class TableRow:
    n: int
    word: List[int]
    components: int
    Q: PolyT
    expected: PolyT
    T0: str
    recurrence_ok: Optional[bool] = None

    @property
    def matches(self) -> bool:
        return self.Q == self.expected

    def to_json(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "word": self.word,
            "components": self.components,
            "Q": str(self.Q),
            "Q_json": self.Q.to_json(),
            "Q_factored": render_factored(self.Q),
            "expected": str(self.expected),
            "matches": self.matches,
            "recurrence_ok": self.recurrence_ok,
            "T0": self.T0,
        }


@dataclass
class TwoStrandTable:
    convention: LeafConvention
    rows: List[TableRow] = field(default_factory=list)

    @property
    def mismatches(self) -> List[TableRow]:
        return [r for r in self.rows if not r.matches or r.recurrence_ok is False]

    def to_json(self) -> str:
        payload = {
            "family": "two-strand",
            "convention": self.convention.value,
            "rows": [r.to_json() for r in self.rows],
            "mismatches": [r.n for r in self.mismatches],
        }
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        header = f"{'n':>4}  {'l':>2}  {'T0':>6}  {'ok':>3}  Q"
        lines = [f"two-strand family, convention {self.convention.value}", header, "-" * len(header)]
        for r in self.rows:
            flag = "yes" if r.matches and r.recurrence_ok is not False else "NO"
            lines.append(f"{r.n:>4}  {r.components:>2}  {r.T0:>6}  {flag:>3}  {render_factored(r.Q)}")
        return "\n".join(lines)


def build_table(
    n_min: int,
    n_max: int,
    cfg: Optional[EvalConfig] = None,
    stabilization: Optional[StabilizationConfig] = None,
    memo: Optional[SkeinMemo] = None,
) -> TwoStrandTable:
    """
    Recover Q for σ₁ⁿ, n_min <= n <= n_max, and check closed forms and the
    recurrence.

    Args:
        n_min: First exponent
        n_max: Last exponent (an empty range gives an empty table)

    Returns:
        TwoStrandTable with one row per exponent
    """
    cfg = cfg or EvalConfig()
    table = TwoStrandTable(convention=cfg.convention)
    by_n: Dict[int, PolyT] = {}
    for n in range(n_min, n_max + 1):
        w = two_strand_word(n)
        hidden = recover_Q(w, cfg, stabilization=stabilization, memo=memo)
        by_n[n] = hidden.poly
        row = TableRow(n=n, word=list(w.letters), components=hidden.components,
                       Q=hidden.poly, expected=closed_form(n, cfg.convention),
                       T0=str(minimal_T0(w, cfg, recovered=hidden)))
        if n - 2 in by_n:
            row.recurrence_ok = hidden.poly == recurrence_rhs(by_n[n - 2], by_n[n - 1])
        if not row.matches:
            logger.warning(f"σ₁^{n}: Q = {hidden.poly}, closed form {row.expected}")
        table.rows.append(row)
    logger.info(f"Two-strand table [{n_min}, {n_max}]: {len(table.mismatches)} mismatches")
    return table
