"""
Law suites: executable checks of the skein, invariance, degree, parity,
leading-coefficient and tree-independence laws over a seeded corpus plus the
fixed regression words.

Every check is exact. A suite never raises for a failing case; failures are
collected in a LawReport with the word and per-case seed that reproduce them.
"""

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from ..tools.braidword import BraidWord, component_count, conway_split
from ..tools.hidden_q import (
    DegreeLawError,
    c_table,
    eval_Q_direct,
    op_Delta,
    op_S,
    op_negative_destab,
    q_skein_defect,
    recover_Q,
    specialize_alpha_one,
    translate_leaves,
)
from ..tools.ringkit import RingError, XI_INV_MINUS_XI, Laurent2, PolyT
from ..tools.skein_f import EvalConfig, LeafConvention, NEG_DESTAB, Strategy, eval_F
from ..tools.utils.stabilization import StabilizationConfig, StabilizationError
from .fuzz import FuzzCase, FuzzSpec, generate_corpus, random_moves, regression_corpus

logger = logging.getLogger(__name__)

ALPHA = Laurent2.monomial(1, 0)
ALPHA_INV = Laurent2.monomial(-1, 0)


class LawFailure(BaseModel):
    """One failing (or, in experiment mode, diverging) case."""
    case: int
    word: List[int]
    strands: int
    seed: int
    origin: str = "random"
    detail: str


class LawReport(BaseModel):
    law: str
    convention: str
    strategy: str
    gating: bool = True
    cases: int = 0
    failures: List[LawFailure] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.gating or not self.failures

    def to_json(self, include_timing: bool = False) -> str:
        """JSON with sorted keys; wall time is included only on request."""
        exclude = None if include_timing else {"wall_time"}
        return json.dumps(self.model_dump(mode="json", exclude=exclude), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        return render_table([self])


def render_table(reports: Sequence[LawReport], include_timing: bool = True) -> str:
    """Fixed-width summary table of several reports."""
    header = f"{'law':<26}{'convention':<12}{'cases':>7}{'failures':>10}  {'status':<10}"
    lines = [header + (f"{'seconds':>9}" if include_timing else "")]
    for r in reports:
        if not r.gating:
            status = "REPORT"
        else:
            status = "PASS" if r.passed else "FAIL"
        row = f"{r.law:<26}{r.convention:<12}{r.cases:>7}{len(r.failures):>10}  {status:<10}"
        lines.append(row + (f"{r.wall_time:>9.2f}" if include_timing else ""))
    for r in reports:
        for f in r.failures:
            word = " ".join(str(e) for e in f.word) or "-"
            lines.append(f"  {r.law}: case {f.case} [{word}] on {f.strands} (seed {f.seed}): {f.detail}")
    return "\n".join(lines) + "\n"


class LawContext:
    """Shared settings of one suite run."""

    def __init__(self, cfg: Optional[EvalConfig] = None,
                 stabilization: Optional[StabilizationConfig] = None,
                 threads: int = 1):
        self.cfg = cfg or EvalConfig()
        self.stabilization = stabilization or StabilizationConfig()
        self.threads = max(1, threads)

    def F(self, w: BraidWord, cfg: Optional[EvalConfig] = None):
        value, _ = eval_F(w, cfg or self.cfg)
        return value

    def Q(self, w: BraidWord, cfg: Optional[EvalConfig] = None):
        return recover_Q(w, cfg or self.cfg, stabilization=self.stabilization).poly


# A case check returns None on success, a failure detail otherwise
CaseCheck = Callable[[FuzzCase, LawContext, FuzzSpec], Optional[str]]


def corpus_for(spec: FuzzSpec) -> List[FuzzCase]:
    """Regression words followed by the seeded random corpus."""
    return regression_corpus() + generate_corpus(spec)


def _failure(case: FuzzCase, detail: str) -> LawFailure:
    return LawFailure(case=case.index, word=list(case.word.letters), strands=case.word.strands,
                      seed=case.seed, origin=case.origin, detail=detail)


def _guarded(check: CaseCheck, case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    try:
        return check(case, ctx, spec)
    except (RingError, StabilizationError, DegreeLawError) as e:
        return f"{type(e).__name__}: {e}"
    except Exception as e:
        # any other error is recorded against its case; the suite goes on
        logger.exception(f"Unexpected error on case {case.index} [{case.word}] on {case.word.strands}")
        return f"unexpected {type(e).__name__}: {e}"


def run_suite(
    law: str,
    check: CaseCheck,
    cases: Sequence[FuzzCase],
    ctx: LawContext,
    spec: FuzzSpec,
    gating: bool = True,
) -> LawReport:
    """
    Run one case check over a corpus; results are merged by case order.
    """
    logger.info(f"Suite {law} started: {len(cases)} cases, {ctx.threads} thread(s)")
    started = time.perf_counter()
    if ctx.threads > 1:
        with ThreadPoolExecutor(max_workers=ctx.threads) as pool:
            details = list(pool.map(lambda c: _guarded(check, c, ctx, spec), cases))
    else:
        details = [_guarded(check, c, ctx, spec) for c in cases]
    failures = [_failure(c, d) for c, d in zip(cases, details) if d is not None]
    report = LawReport(law=law, convention=ctx.cfg.convention.value, strategy=ctx.cfg.strategy.value,
                       gating=gating, cases=len(cases), failures=failures,
                       wall_time=round(time.perf_counter() - started, 3))
    if failures and gating:
        for f in failures:
            logger.error(f"{law} failed on [{' '.join(map(str, f.word))}] on {f.strands}: {f.detail}")
    logger.info(f"Suite {law} finished: {len(failures)} failure(s) in {report.wall_time:.2f}s")
    return report


def _experiment_mode(ctx: LawContext) -> bool:
    """The Paper leaf values break the skein normalization; such runs only report."""
    return ctx.cfg.convention is LeafConvention.PAPER


# --- case checks ---------------------------------------------------------------

def skein_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    w = case.word
    if not w.letters:
        return None
    position = case.rng().randrange(len(w.letters))
    switched, smoothed = conway_split(w, position)
    plus, minus = (w, switched) if w.letters[position] > 0 else (switched, w)
    f_plus, f_minus, f_zero = ctx.F(plus), ctx.F(minus), ctx.F(smoothed)
    if f_plus * ALPHA_INV - f_minus * ALPHA != f_zero * XI_INV_MINUS_XI:
        return f"F-skein fails at position {position}"
    defect = q_skein_defect(ctx.Q(plus), ctx.Q(minus), ctx.Q(smoothed))
    if not defect.is_zero():
        return f"Q-skein fails at position {position}: defect {defect}"
    return None


def invariance_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    w = case.word
    moved, moves = random_moves(w, case.rng(), spec.move_budget, spec.max_strands + 1)
    if ctx.F(moved) != ctx.F(w):
        return f"F changed under moves {', '.join(map(str, moves))}"
    q = ctx.Q(w)
    if ctx.Q(moved) != q:
        return f"Q changed under moves {', '.join(map(str, moves))}"
    stabilized = BraidWord(w.strands + 1, w.letters + (-w.strands,))
    if ctx.F(stabilized) != ctx.F(w) * NEG_DESTAB:
        return "negative stabilization does not multiply F by -a^-1 x^-1"
    if ctx.Q(stabilized) != op_negative_destab(q):
        return "negative stabilization does not act on Q as -a^-1 (T -> T+1)"
    return None


def degree_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    q = ctx.Q(case.word)
    l = component_count(case.word)
    if q.degree != l - 1:
        return f"deg_T Q = {q.degree}, expected {l - 1}"
    return None


def _at_alpha_one(q: PolyT) -> PolyT:
    """Q(1, T) as a PolyT with constant coefficients."""
    return PolyT(specialize_alpha_one(q))


def parity_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    g = _at_alpha_one(ctx.Q(case.word))
    # S-invariant means constant in T
    if op_S(g) != g:
        return f"Q(1,T) is not constant: {g}"
    value = Fraction(g.coeff(0).coeff(0))
    if value.denominator != 1 or value.numerator % 2 == 0:
        return f"Q(1,T) = {value} is not an odd integer"
    return None


def leading_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    l = component_count(case.word)
    g = _at_alpha_one(ctx.Q(case.word))
    if g.degree != l - 1:
        return f"Q(1,T) has degree {g.degree}, expected {l - 1}"
    # Δ^{l-1} leaves the constant (l-1)! * leading coefficient
    for _ in range(l - 1):
        g = op_Delta(g)
    k = Fraction(g.coeff(0).coeff(0))
    if k.denominator != 1:
        return f"(l-1)! * leading coefficient = {k} is not an integer"
    if k.numerator % 2 ** l != 2 ** (l - 1):
        return f"k = {k} is not 2^{l - 1} mod 2^{l}"
    return None


def tree_independence_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    a = replace(ctx.cfg, strategy=Strategy.STAIRCASE_FIRST)
    b = replace(ctx.cfg, strategy=Strategy.NEGATIVE_ELIM_FIRST)
    if ctx.F(case.word, a) != ctx.F(case.word, b):
        return "strategies give different F"
    if ctx.Q(case.word, a) != ctx.Q(case.word, b):
        return "strategies give different Q"
    return None


def cross_engine_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    direct = eval_Q_direct(case.word, ctx.cfg, ctx.stabilization).poly
    recovered = ctx.Q(case.word)
    if direct != recovered:
        return f"direct engine {direct} != recovered {recovered}"
    return None


def stabilization_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    hidden = recover_Q(case.word, ctx.cfg, stabilization=ctx.stabilization)
    lo, hi = hidden.verified_window
    # 5 further points beyond the verified window
    table = c_table(case.word, lo, hi + 5, ctx.cfg)
    for t, c in table.rows():
        if hidden.poly(t) != c:
            return f"interpolant disagrees with c-table at T={t}"
    if hidden.empirical_T0 is not None and hidden.empirical_T0 > lo:
        return f"T0 = {hidden.empirical_T0} lies above the verified window start {lo}"
    return None


def translation_case(case: FuzzCase, ctx: LawContext, spec: FuzzSpec) -> Optional[str]:
    report = translate_leaves(case.word, 1, ctx.cfg, ctx.stabilization)
    if not report.law_holds:
        return "leaf translation by 1 did not translate Q by 1"
    return None


# --- suites ----------------------------------------------------------------------

@dataclass(frozen=True)
class Law:
    """
    One law of the suite table. The name is the one written into reports;
    a pinned convention overrides the context's convention for that law.
    """
    name: str
    case: CaseCheck
    select: Callable[[FuzzCase], bool] = lambda c: True
    gating: bool = True
    # under the Paper convention the law only reports
    paper_reports: bool = False
    convention: Optional[LeafConvention] = None

    def context(self, ctx: LawContext) -> LawContext:
        if self.convention is None or self.convention is ctx.cfg.convention:
            return ctx
        return LawContext(replace(ctx.cfg, convention=self.convention), ctx.stabilization, ctx.threads)


def _has_letters(case: FuzzCase) -> bool:
    return bool(case.word.letters)


def _is_knot(case: FuzzCase) -> bool:
    return component_count(case.word) == 1


SUITES: Dict[str, Law] = {law.name: law for law in (
    Law("skein", skein_case, _has_letters, paper_reports=True),
    Law("invariance", invariance_case, paper_reports=True),
    Law("degree", degree_case),
    Law("parity", parity_case, _is_knot),
    Law("leading-coefficient", leading_case),
    Law("tree-independence", tree_independence_case, paper_reports=True),
    Law("cross-engine", cross_engine_case),
    Law("stabilization", stabilization_case),
    Law("leaf-translation", translation_case, gating=False),
    Law("tree-independence-paper", tree_independence_case, paper_reports=True,
        convention=LeafConvention.PAPER),
)}


def _law(name: str) -> Law:
    try:
        return SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; expected one of all, {', '.join(SUITES)}") from None


def run_law(name: str, spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """
    Run one law of the table over the corpus of a FuzzSpec.

    Raises:
        KeyError: On an unknown law name
    """
    law = _law(name)
    ctx = law.context(ctx or LawContext())
    experiment = law.paper_reports and _experiment_mode(ctx)
    cases = [c for c in corpus_for(spec) if law.select(c)]
    report = run_suite(law.name, law.case, cases, ctx, spec, gating=law.gating and not experiment)
    if experiment:
        report.notes.append(f"experiment mode: {len(report.failures)} divergence witness(es)")
    return report


def check_skein_identity(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """F- and Q-skein identities at a random crossing of every word."""
    return run_law("skein", spec, ctx)


def check_transverse_invariance(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """
    Random transverse move sequences leave F and Q unchanged; negative
    stabilization acts by -α⁻¹ξ⁻¹ on F and by -α⁻¹·(T ↦ T+1) on Q.
    """
    return run_law("invariance", spec, ctx)


def check_degree_law(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    return run_law("degree", spec, ctx)


def check_parity_knot(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """Q_K(1, T) is a constant odd integer for every knot of the corpus."""
    return run_law("parity", spec, ctx)


def check_leading_coeff_mod(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """(l-1)!·[T^{l-1}]Q(1, T) ≡ 2^{l-1} (mod 2^l)."""
    return run_law("leading-coefficient", spec, ctx)


def check_tree_independence(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """
    Both strategies give the same F and Q. Under the Paper convention the run
    is an experiment: divergences are recorded as witnesses and do not gate.
    """
    return run_law("tree-independence", spec, ctx)


def check_cross_engine(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """The direct operator engine agrees with interpolation-based recovery."""
    return run_law("cross-engine", spec, ctx)


def check_stabilization(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """The interpolant matches the coefficient series past its verified window."""
    return run_law("stabilization", spec, ctx)


def check_leaf_translation(spec: FuzzSpec, ctx: Optional[LawContext] = None) -> LawReport:
    """Translating every leaf by T ↦ T+1 translates every Q the same way."""
    return run_law("leaf-translation", spec, ctx)


def run_suites(names: Sequence[str], spec: FuzzSpec, ctx: Optional[LawContext] = None) -> List[LawReport]:
    """
    Run the named suites ("all" selects every suite). A pinned-convention law
    is skipped by "all" when it would repeat its unpinned twin, so under the
    Paper convention "all" runs tree-independence once.

    Gating failures are replayed once and annotated with whether they reproduce.

    Raises:
        KeyError: On an unknown suite name
    """
    ctx = ctx or LawContext()
    if "all" in names:
        selected = [name for name, law in SUITES.items()
                    if law.convention is None or law.convention is not ctx.cfg.convention]
    else:
        selected = [_law(name).name for name in names]
    reports = []
    for name in selected:
        report = run_law(name, spec, ctx)
        if report.gating and report.failures:
            again = sum(replay_failure(name, f, ctx, spec) == f.detail for f in report.failures)
            report.notes.append(f"replay: {again} of {len(report.failures)} failure(s) reproduce")
        reports.append(report)
    return reports


def replay_failure(law: str, failure: LawFailure, ctx: Optional[LawContext] = None,
                   spec: Optional[FuzzSpec] = None) -> Optional[str]:
    """
    Re-run the case behind a failure under the law's own convention; returns
    the same detail when it reproduces.

    Raises:
        KeyError: On an unknown law name
    """
    entry = _law(law)
    case = FuzzCase(index=failure.case, word=BraidWord(failure.strands, tuple(failure.word)),
                    seed=failure.seed, origin=failure.origin)
    return _guarded(entry.case, case, entry.context(ctx or LawContext()), spec or FuzzSpec())
