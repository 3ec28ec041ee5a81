"""
Corpus runner: evaluates every entry of a corpus file with a worker pool and
writes one JSON line per entry, in input order.

Corpus lines look like ``name ; strands ; letters ; [expected-Q]``; ``#``
starts a comment. A malformed line becomes an error entry and the run goes on.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import sympy as sp
from pydantic import BaseModel

from ..tools.evaluation import A, T, render_factored
from ..tools.hidden_q import DegreeLawError, recover_Q
from ..tools.ringkit import PolyT, RingError
from ..tools.skein_f import EvalConfig
from ..tools.utils.stabilization import StabilizationConfig, StabilizationError
from ..tools.utils.word_validator import CorpusEntry, WordValidationError, parse_corpus_line

logger = logging.getLogger(__name__)


class CorpusResult(BaseModel):
    """Outcome for one corpus line."""
    line: int
    name: Optional[str] = None
    strands: Optional[int] = None
    word: Optional[List[int]] = None
    status: str = "success"
    Q: Optional[str] = None
    Q_factored: Optional[str] = None
    Q_json: Optional[list] = None
    components: Optional[int] = None
    degree: Optional[int] = None
    T0: Optional[str] = None
    expected: Optional[str] = None
    matches: Optional[bool] = None
    error: Optional[str] = None

    def to_json_line(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, ensure_ascii=False)


class CorpusSummary(BaseModel):
    entries: int = 0
    evaluated: int = 0
    errors: int = 0
    mismatches: int = 0


def expected_matches(expected: str, poly: PolyT) -> bool:
    """
    Compare an expected Q written in sympy syntax (``a`` for α, ``T``; ``^``
    is accepted for powers) against a computed polynomial.

    Raises:
        ValueError: If the expected text cannot be parsed
    """
    try:
        target = sp.sympify(expected, locals={"a": A, "T": T})
    except (sp.SympifyError, SyntaxError, TypeError) as e:
        raise ValueError(f"cannot parse expected Q {expected!r}: {e}")
    return sp.simplify(target - poly.to_sympy(A, T)) == 0


def read_corpus(lines: Iterable[str]) -> List[Union[CorpusEntry, CorpusResult]]:
    """Parse lines into entries; malformed lines become error results."""
    items: List[Union[CorpusEntry, CorpusResult]] = []
    for number, line in enumerate(lines, start=1):
        try:
            entry = parse_corpus_line(line, number)
        except WordValidationError as e:
            logger.warning(f"Malformed corpus line {number}: {e}")
            items.append(CorpusResult(line=number, status="error", error=str(e)))
            continue
        if entry is not None:
            items.append(entry)
    return items


class CorpusRunner:
    """
    Evaluates corpus entries on a thread pool sharing the memo cache.
    """

    def __init__(self, cfg: Optional[EvalConfig] = None,
                 stabilization: Optional[StabilizationConfig] = None,
                 threads: int = 1):
        self.cfg = cfg or EvalConfig()
        self.stabilization = stabilization or StabilizationConfig()
        self.threads = max(1, threads)

    def evaluate_entry(self, entry: CorpusEntry) -> CorpusResult:
        base = dict(line=entry.line, name=entry.name, strands=entry.strands,
                    word=list(entry.word), expected=entry.expected)
        try:
            hidden = recover_Q(entry.braid(), self.cfg, stabilization=self.stabilization)
        except (RingError, StabilizationError, DegreeLawError) as e:
            logger.error(f"Engine error on corpus entry {entry.name}: {e}")
            return CorpusResult(status="error", error=f"{type(e).__name__}: {e}", **base)

        result = CorpusResult(
            Q=str(hidden.poly),
            Q_factored=render_factored(hidden.poly),
            Q_json=hidden.poly.to_json(),
            components=hidden.components,
            degree=hidden.degree,
            T0=hidden.t0_display,
            **base,
        )
        if entry.expected is not None:
            try:
                result.matches = expected_matches(entry.expected, hidden.poly)
            except ValueError as e:
                result.status = "error"
                result.error = str(e)
                return result
            if not result.matches:
                result.status = "mismatch"
                logger.warning(f"Corpus entry {entry.name}: expected {entry.expected}, got {result.Q_factored}")
        return result

    def run(self, lines: Iterable[str]) -> Tuple[List[CorpusResult], CorpusSummary]:
        """
        Evaluate all entries of a corpus.

        Returns:
            (results in input order, summary counts)
        """
        items = read_corpus(lines)
        entries = [item for item in items if isinstance(item, CorpusEntry)]
        logger.info(f"Evaluating {len(entries)} corpus entries on {self.threads} thread(s)")

        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                evaluated = iter(list(pool.map(self.evaluate_entry, entries)))
        else:
            evaluated = iter([self.evaluate_entry(e) for e in entries])

        results = [next(evaluated) if isinstance(item, CorpusEntry) else item for item in items]
        summary = CorpusSummary(
            entries=len(results),
            evaluated=sum(1 for r in results if r.status in ("success", "mismatch")),
            errors=sum(1 for r in results if r.status == "error"),
            mismatches=sum(1 for r in results if r.status == "mismatch"),
        )
        logger.info(f"Corpus done: {summary.evaluated} evaluated, {summary.errors} errors, "
                    f"{summary.mismatches} mismatches")
        return results, summary


def run_corpus_file(
    path: Union[str, Path],
    cfg: Optional[EvalConfig] = None,
    stabilization: Optional[StabilizationConfig] = None,
    threads: int = 1,
) -> Tuple[List[CorpusResult], CorpusSummary]:
    """Read and evaluate a corpus file."""
    text = Path(path).read_text(encoding="utf-8")
    return CorpusRunner(cfg, stabilization, threads).run(text.splitlines())


def write_results(results: Iterable[CorpusResult], path: Union[str, Path]) -> Path:
    """Write JSON lines with sorted keys."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(r.to_json_line() + "\n" for r in results), encoding="utf-8")
    return path
