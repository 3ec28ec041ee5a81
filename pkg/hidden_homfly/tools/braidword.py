"""
Braid-word combinatorics.

Braid words on an explicit number of strands, their permutations and
component counts, transverse Markov moves, Conway splitting, and the Coxeter
utilities (reduced words, staircase normal form, exchange rewriting) that the
F-engine relies on for termination.

Letter e > 0 stands for σ_e, e < 0 for σ_|e|⁻¹. Positions are 0-based.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class BraidWordError(Exception):
    """Raised when a braid word or a move on it is invalid."""
    pass


@dataclass(frozen=True)
class BraidWord:
    """A braid word on ``strands`` strands; its closure is the link studied."""
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidWordError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0:
                raise BraidWordError("letter 0 is not a braid generator")
            if abs(e) >= self.strands:
                raise BraidWordError(
                    f"letter {e} out of range for {self.strands} strands "
                    f"(|e| must be at most {self.strands - 1})"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)

    def with_letters(self, letters: Sequence[int], strands: Optional[int] = None) -> "BraidWord":
        return BraidWord(self.strands if strands is None else strands, tuple(letters))

    def is_positive(self) -> bool:
        return all(e > 0 for e in self.letters)

    def negative_count(self) -> int:
        return sum(1 for e in self.letters if e < 0)

    def index_count(self, i: int) -> int:
        """Occurrences of generator index i, either sign."""
        return sum(1 for e in self.letters if abs(e) == i)


def parse_word(text: str, strands: int) -> BraidWord:
    """
    Parse whitespace-separated signed integers into a braid word.

    Args:
        text: Letters, e.g. "1 -2 1"
        strands: Explicit strand count (never inferred)

    Returns:
        The parsed BraidWord

    Raises:
        BraidWordError: On a non-integer token, a zero letter, an index out
            of range or strands < 1
    """
    letters = []
    for token in str(text).split():
        try:
            letters.append(int(token))
        except ValueError:
            raise BraidWordError(f"not an integer letter: {token!r}")
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidWordError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other (other acts first)."""
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.size)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def times_generator(self, i: int) -> "Permutation":
        """self ∘ s_i."""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out

    def coxeter_length(self) -> int:
        """Inversion count."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def has_right_descent(self, i: int) -> bool:
        """ℓ(self ∘ s_i) < ℓ(self)."""
        return self.images[i - 1] > self.images[i]


def permutation(w: BraidWord) -> Permutation:
    """Image of w under B_n → S_n; letter signs are ignored."""
    images = list(range(1, w.strands + 1))
    for e in w.letters:
        i = abs(e)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def component_count(w: BraidWord) -> int:
    """Number of components of the closure (cycles of the permutation)."""
    return len(permutation(w).cycles())


def writhe(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def self_linking(w: BraidWord) -> int:
    """Self-linking number of the transverse closure: writhe - strands."""
    return writhe(w) - w.strands


def inverse_word(w: BraidWord) -> BraidWord:
    return w.with_letters(tuple(-e for e in reversed(w.letters)))


def mirror_word(w: BraidWord) -> BraidWord:
    return w.with_letters(tuple(-e for e in w.letters))


def free_reduce_cyclic(w: BraidWord) -> BraidWord:
    """
    Cancel adjacent inverse pairs, including the pair formed by the last and
    first letters (a conjugation). Every step is a transverse move.

    The cyclic step can leave a letter that only cancelled around the end,
    e.g. [1, 2, -1] on 3 strands reduces to [2]: conjugation by σ₁ keeps the
    closure, so the result is the same transverse link, not a reduced word
    of the same braid.
    """
    stack: List[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo += 1
        hi -= 1
    return w.with_letters(stack[lo:hi])


def cyclic_canonical(w: BraidWord) -> BraidWord:
    """Lexicographically least rotation of the letters."""
    letters = w.letters
    if not letters:
        return w
    best = min(letters[i:] + letters[:i] for i in range(len(letters)))
    return w.with_letters(best)


def canonical_form(w: BraidWord) -> BraidWord:
    """Cyclic free reduction followed by the least rotation: the memo key."""
    return cyclic_canonical(free_reduce_cyclic(w))


def conway_split(w: BraidWord, position: int) -> Tuple[BraidWord, BraidWord]:
    """
    Conway splitting at one crossing.

    Args:
        w: The braid word
        position: 0-based index of the crossing

    Returns:
        (switched, smoothed): the letter's sign flipped, and the letter deleted

    Raises:
        BraidWordError: If position is out of range
    """
    if not 0 <= position < len(w.letters):
        raise BraidWordError(f"split position {position} out of range for word of length {len(w)}")
    letters = list(w.letters)
    switched = letters[:position] + [-letters[position]] + letters[position + 1:]
    smoothed = letters[:position] + letters[position + 1:]
    return w.with_letters(switched), w.with_letters(smoothed)


# Coxeter utilities

def reduced_word(p: Permutation) -> Tuple[int, ...]:
    """A reduced word for p, peeling right descents (bubble sort)."""
    word: List[int] = []
    current = p
    while True:
        for i in range(1, current.size):
            if current.has_right_descent(i):
                word.append(i)
                current = current.times_generator(i)
                break
        else:
            break
    return tuple(reversed(word))


def is_reduced_positive(w: BraidWord) -> bool:
    """
    True iff the positive word w is reduced: len(w) equals the Coxeter
    length of its permutation.

    Raises:
        BraidWordError: If w has a negative letter
    """
    if not w.is_positive():
        raise BraidWordError(f"is_reduced_positive needs a positive word, got [{w}]")
    return len(w) == permutation(w).coxeter_length()


def staircase_word(p: Permutation) -> BraidWord:
    """
    Reduced positive word for p in the coset normal form
    p = u·(s_{n-1} s_{n-2} … s_k) with u fixing n, applied recursively.
    The top generator s_{n-1} occurs once if p moves n and never otherwise.
    """
    n = p.size
    tail: List[int] = []
    current = p
    for top in range(n, 1, -1):
        k = current.inverse()(top)
        block = list(range(top - 1, k - 1, -1))
        # u = p ∘ (s_{top-1} … s_k)⁻¹ = p ∘ s_k ∘ … ∘ s_{top-1}
        for i in reversed(block):
            current = current.times_generator(i)
        tail = block + tail
    return BraidWord(n, tuple(tail))


def exchange_rewrite(w: BraidWord, prefix_length: int) -> BraidWord:
    """
    Rewrite a positive word so that letters prefix_length - 1 and
    prefix_length (0-based) are the same generator σ_i, exposing σ_i².

    The length-k prefix must be reduced and appending letter k (0-based),
    with index i, must decrease the Coxeter length. The prefix is replaced by
    another reduced word of the same permutation ending in i; reduced words of
    one permutation are joined by braid relations (see ``braid_move_path``),
    so the braid element is unchanged.

    Raises:
        BraidWordError: If the precondition is violated
    """
    k = prefix_length
    if not w.is_positive():
        raise BraidWordError("exchange_rewrite needs a positive word")
    if not 1 <= k < len(w.letters):
        raise BraidWordError(f"prefix length {k} out of range for word of length {len(w)}")
    prefix = w.with_letters(w.letters[:k])
    if not is_reduced_positive(prefix):
        raise BraidWordError(f"prefix [{prefix}] is not reduced")
    i = w.letters[k]
    p = permutation(prefix)
    if not p.has_right_descent(i):
        raise BraidWordError(f"appending {i} to [{prefix}] does not decrease length")
    new_prefix = reduced_word(p.times_generator(i)) + (i,)
    return w.with_letters(new_prefix + w.letters[k:])


def first_non_reduced_prefix(w: BraidWord) -> Optional[int]:
    """
    Smallest k such that the length-k prefix is reduced and the length-(k+1)
    prefix is not; None when the positive word is reduced.
    """
    images = list(range(1, w.strands + 1))
    for k, e in enumerate(w.letters):
        # the letter would undo an inversion
        if images[e - 1] > images[e]:
            return k
        images[e - 1], images[e] = images[e], images[e - 1]
    return None


@lru_cache(maxsize=4096)
def _move_path(a: Tuple[int, ...], b: Tuple[int, ...], n: int) -> Tuple[Tuple[int, ...], ...]:
    if a == b:
        return (a,)
    if a[0] == b[0]:
        return tuple((a[0],) + x for x in _move_path(a[1:], b[1:], n))
    s, t = a[0], b[0]
    z_s = (s, t) if abs(s - t) >= 2 else (s, t, s)
    z_t = (t, s) if abs(s - t) >= 2 else (t, s, t)
    # both s and t are left descents, so a reduced word may start with z_s
    rest = permutation(BraidWord(n, z_s)).inverse().compose(permutation(BraidWord(n, a)))
    r = reduced_word(rest)
    c, d = z_s + r, z_t + r
    return _move_path(a, c, n) + _move_path(d, b, n)


def braid_move_path(a: BraidWord, b: BraidWord) -> List[BraidWord]:
    """
    Chain of words from a to b, each obtained from the previous one by a
    single braid relation (far commutation or σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}).

    Args:
        a: Reduced positive word
        b: Reduced positive word with the same permutation and strand count

    Returns:
        The words of the chain, a first and b last

    Raises:
        BraidWordError: If the words are not reduced positive words of one permutation
    """
    if a.strands != b.strands:
        raise BraidWordError("braid_move_path needs equal strand counts")
    for w in (a, b):
        if not is_reduced_positive(w):
            raise BraidWordError(f"[{w}] is not a reduced positive word")
    if permutation(a) != permutation(b):
        raise BraidWordError(f"[{a}] and [{b}] have different permutations")
    return [a.with_letters(x) for x in _move_path(a.letters, b.letters, a.strands)]


# Markov moves

class MoveKind(str, Enum):
    FREE_REDUCE = "free_reduce"
    BRAID_FAR = "braid_relation_far"
    BRAID_ADJACENT = "braid_relation_adjacent"
    CONJUGATE = "conjugate"
    CYCLIC_ROTATE = "cyclic_rotate"
    STABILIZE_POSITIVE = "stabilize_positive"
    DESTABILIZE_POSITIVE = "destabilize_positive"
    STABILIZE_NEGATIVE = "stabilize_negative"
    DESTABILIZE_NEGATIVE = "destabilize_negative"


_NON_TRANSVERSE = {MoveKind.STABILIZE_NEGATIVE, MoveKind.DESTABILIZE_NEGATIVE}


@dataclass(frozen=True)
class MarkovMove:
    """
    One Markov move. ``arg`` is the position for FreeReduce and the braid
    relations, the conjugating letter for Conjugate and the rotation amount
    for CyclicRotate; stabilizations ignore it.
    """
    kind: MoveKind
    arg: int = 0

    @property
    def is_transverse(self) -> bool:
        return self.kind not in _NON_TRANSVERSE

    def __str__(self) -> str:
        return f"{self.kind.value}({self.arg})"


def apply_move(w: BraidWord, move: MarkovMove) -> BraidWord:
    """
    Apply one Markov move.

    Raises:
        BraidWordError: If the move does not apply to w
    """
    letters = list(w.letters)
    n = w.strands
    kind, p = move.kind, move.arg

    if kind is MoveKind.FREE_REDUCE:
        if not (0 <= p < len(letters) - 1 and letters[p] == -letters[p + 1]):
            raise BraidWordError(f"no inverse pair at position {p} in [{w}]")
        return w.with_letters(letters[:p] + letters[p + 2:])

    if kind is MoveKind.BRAID_FAR:
        if not (0 <= p < len(letters) - 1 and abs(abs(letters[p]) - abs(letters[p + 1])) >= 2):
            raise BraidWordError(f"letters at {p}, {p + 1} of [{w}] do not commute")
        letters[p], letters[p + 1] = letters[p + 1], letters[p]
        return w.with_letters(letters)

    if kind is MoveKind.BRAID_ADJACENT:
        if not 0 <= p < len(letters) - 2:
            raise BraidWordError(f"no braid triple at position {p} in [{w}]")
        x, y, z = letters[p:p + 3]
        if not (x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0)):
            raise BraidWordError(f"letters {x} {y} {z} do not form a braid triple")
        # σ_xσ_yσ_x → σ_yσ_xσ_y
        letters[p:p + 3] = [y, x, y]
        return w.with_letters(letters)

    if kind is MoveKind.CONJUGATE:
        if not (p != 0 and abs(p) < n):
            raise BraidWordError(f"cannot conjugate by letter {p} on {n} strands")
        # σ_p⁻¹ w σ_p
        return w.with_letters([-p] + letters + [p])

    if kind is MoveKind.CYCLIC_ROTATE:
        if not letters:
            return w
        k = p % len(letters)
        return w.with_letters(letters[k:] + letters[:k])

    if kind in (MoveKind.STABILIZE_POSITIVE, MoveKind.STABILIZE_NEGATIVE):
        sign = 1 if kind is MoveKind.STABILIZE_POSITIVE else -1
        return BraidWord(n + 1, tuple(letters) + (sign * n,))

    if kind in (MoveKind.DESTABILIZE_POSITIVE, MoveKind.DESTABILIZE_NEGATIVE):
        sign = 1 if kind is MoveKind.DESTABILIZE_POSITIVE else -1
        if n < 2 or not letters or letters[-1] != sign * (n - 1) or w.index_count(n - 1) != 1:
            raise BraidWordError(f"[{w}] on {n} strands cannot be destabilized ({kind.value})")
        return BraidWord(n - 1, tuple(letters[:-1]))

    raise BraidWordError(f"unknown move kind {kind!r}")


def applicable_moves(w: BraidWord) -> List[MarkovMove]:
    """All transverse moves that apply to w, in a fixed order."""
    letters = w.letters
    n = w.strands
    moves: List[MarkovMove] = []
    for p in range(len(letters) - 1):
        if letters[p] == -letters[p + 1]:
            moves.append(MarkovMove(MoveKind.FREE_REDUCE, p))
        if abs(abs(letters[p]) - abs(letters[p + 1])) >= 2:
            moves.append(MarkovMove(MoveKind.BRAID_FAR, p))
    for p in range(len(letters) - 2):
        x, y, z = letters[p:p + 3]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            moves.append(MarkovMove(MoveKind.BRAID_ADJACENT, p))
    for i in range(1, n):
        moves.append(MarkovMove(MoveKind.CONJUGATE, i))
        moves.append(MarkovMove(MoveKind.CONJUGATE, -i))
    for k in range(1, len(letters)):
        moves.append(MarkovMove(MoveKind.CYCLIC_ROTATE, k))
    moves.append(MarkovMove(MoveKind.STABILIZE_POSITIVE))
    if n >= 2 and letters and letters[-1] == n - 1 and w.index_count(n - 1) == 1:
        moves.append(MarkovMove(MoveKind.DESTABILIZE_POSITIVE))
    return moves
