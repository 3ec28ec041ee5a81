"""
Seeded generation of braid word corpora for the law suites.

Identical FuzzSpec values produce identical corpora. Strand counts are biased
towards 2-5, some words get a trailing trivial strand (exercising split
unions), and mirrors and inverses are injected so both skein orientations
are used.
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..tools.braidword import (
    BraidWord,
    MarkovMove,
    MoveKind,
    applicable_moves,
    apply_move,
    inverse_word,
    mirror_word,
)

logger = logging.getLogger(__name__)

# relative weights of strand counts 1..6
STRAND_WEIGHTS = (1, 6, 6, 5, 4, 2)
TRAILING_STRAND_RATE = 0.15
MIRROR_RATE = 0.1
INVERSE_RATE = 0.1


@dataclass(frozen=True)
class FuzzSpec:
    """Parameters of a generated corpus."""
    seed: int = 7
    max_strands: int = 6
    max_length: int = 12
    case_count: int = 200
    move_budget: int = 10


@dataclass(frozen=True)
class FuzzCase:
    """One corpus word with the seed that reproduces its per-case randomness."""
    index: int
    word: BraidWord
    seed: int
    origin: str = "random"

    def rng(self) -> random.Random:
        return random.Random(self.seed)


# name, strands, letters
REGRESSION_WORDS: Tuple[Tuple[str, int, Tuple[int, ...]], ...] = (
    ("unknot", 1, ()),
    ("unlink-2", 2, ()),
    ("unlink-3", 3, ()),
    ("unlink-4", 4, ()),
    ("negative-stabilized-unknot", 2, (-1,)),
    ("hopf", 2, (1, 1)),
    ("trefoil", 2, (1, 1, 1)),
    ("trefoil-3", 3, (1, 2, 1, 2)),
    ("mirror-trefoil", 2, (-1, -1, -1)),
    ("figure-eight", 3, (1, -2, 1, -2)),
    ("mixed-3", 3, (-1, 2, -1)),
    ("torus-2-5", 2, (1, 1, 1, 1, 1)),
    ("torus-3-4", 3, (1, 2, 1, 2, 1, 2, 1, 2)),
    ("split-trefoil-unknot", 3, (1, 1, 1)),
)


def case_seed(seed: int, index: int) -> int:
    """Per-case seed; replaying a case needs only (seed, index)."""
    return (seed * 1_000_003 + index) & 0xFFFFFFFFFFFFFFFF


def regression_corpus() -> List[FuzzCase]:
    """The fixed regression words, indexed from -len down to -1."""
    total = len(REGRESSION_WORDS)
    return [
        FuzzCase(index=i - total, word=BraidWord(n, letters), seed=case_seed(0, i), origin=name)
        for i, (name, n, letters) in enumerate(REGRESSION_WORDS)
    ]


def random_word(rng: random.Random, max_strands: int, max_length: int) -> Tuple[BraidWord, str]:
    """One random word and a tag describing how it was produced."""
    choices = list(range(1, min(max_strands, len(STRAND_WEIGHTS)) + 1))
    weights = STRAND_WEIGHTS[:len(choices)]
    n = rng.choices(choices, weights=weights)[0]
    length = rng.randint(0, max_length) if n > 1 else 0
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length))
    w = BraidWord(n, letters)
    origin = "random"
    if n < max_strands and rng.random() < TRAILING_STRAND_RATE:
        w = BraidWord(n + 1, letters)
        origin = "trailing"
    roll = rng.random()
    if roll < MIRROR_RATE:
        return mirror_word(w), origin + "+mirror"
    if roll < MIRROR_RATE + INVERSE_RATE:
        return inverse_word(w), origin + "+inverse"
    return w, origin


def generate_corpus(spec: FuzzSpec) -> List[FuzzCase]:
    """
    Generate ``spec.case_count`` random cases.

    Args:
        spec: Corpus parameters

    Returns:
        Cases indexed 0..case_count-1, identical for identical specs
    """
    rng = random.Random(spec.seed)
    cases = []
    for index in range(spec.case_count):
        w, origin = random_word(rng, spec.max_strands, spec.max_length)
        cases.append(FuzzCase(index=index, word=w, seed=case_seed(spec.seed, index), origin=origin))
    logger.debug(f"Generated {len(cases)} cases from seed {spec.seed}")
    return cases


def random_moves(
    w: BraidWord,
    rng: random.Random,
    budget: int,
    max_strands: Optional[int] = None,
) -> Tuple[BraidWord, List[MarkovMove]]:
    """
    Apply up to ``budget`` random transverse moves.

    Args:
        w: Starting word
        rng: Source of randomness
        budget: Maximum number of moves
        max_strands: Positive stabilization is skipped at this strand count

    Returns:
        (final word, moves applied)
    """
    applied: List[MarkovMove] = []
    for _ in range(rng.randint(1, max(1, budget))):
        moves = applicable_moves(w)
        if max_strands is not None and w.strands >= max_strands:
            moves = [m for m in moves if m.kind is not MoveKind.STABILIZE_POSITIVE]
        if not moves:
            break
        move = rng.choice(moves)
        w = apply_move(w, move)
        applied.append(move)
    return w, applied
