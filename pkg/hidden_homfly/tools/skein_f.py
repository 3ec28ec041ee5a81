"""
The F-engine: evaluation of the transverse HOMFLYPT invariant F_B(α, ξ) of a
closed braid from the normalization axioms

    F is invariant under transverse Markov moves,
    α⁻¹F(B₊) - αF(B₋) = (ξ⁻¹ - ξ)F(B₀),
    F(B') = -α⁻¹ξ⁻¹F(B) for a negative stabilization B' of B,
    F(U) = α⁻¹ / (ξ⁻¹ - ξ),

while recording the transverse computation tree it walks.

Recursion (StaircaseFirst), on the canonical form of the word:
    empty word                 -> unlink leaf
    unused generator index     -> split-union of the two independent halves
    top index used exactly once -> destabilization (factor 1 or -α⁻¹ξ⁻¹)
    negative letter            -> skein at the first negative letter
    positive, not reduced      -> exchange rewrite, then skein at σ_i²
    positive, reduced          -> staircase rewrite, then split-union/destab
(negative-letter count, length, strands) decreases along every edge.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .braidword import (
    BraidWord,
    braid_move_path,
    canonical_form,
    conway_split,
    exchange_rewrite,
    first_non_reduced_prefix,
    permutation,
    staircase_word,
)
from .ringkit import Laurent2, RationalInvariant, XI_INV_MINUS_XI

logger = logging.getLogger(__name__)


class LeafConvention(str, Enum):
    """Values assigned to the crossingless unlink leaves."""
    FORCED = "forced"
    PAPER = "paper"


class Strategy(str, Enum):
    STAIRCASE_FIRST = "staircase"
    NEGATIVE_ELIM_FIRST = "negfirst"


class NodeKind(str, Enum):
    LEAF = "leaf"
    SPLIT = "split"
    DESTAB_POS = "destab-pos"
    DESTAB_NEG = "destab-neg"
    SPLIT_UNION = "split-union"
    REWRITE = "rewrite"


class TreeRecordError(Exception):
    """Raised when a serialized computation tree cannot be replayed."""
    pass


class LeafError(ValueError):
    """Raised for an invalid unlink leaf request."""
    pass


@dataclass(frozen=True)
class EvalConfig:
    """Configuration of one evaluation context."""
    convention: LeafConvention = LeafConvention.FORCED
    strategy: Strategy = Strategy.STAIRCASE_FIRST
    record_tree: bool = False
    memo_enabled: bool = True

    def __post_init__(self):
        object.__setattr__(self, "convention", LeafConvention(self.convention))
        object.__setattr__(self, "strategy", Strategy(self.strategy))


# Skein coefficients. At a negative crossing (node = B₋):
#   F(B₋) = α⁻²·F(switched) - α⁻¹(ξ⁻¹-ξ)·F(smoothed)
# at a positive crossing (node = B₊):
#   F(B₊) = α²·F(switched) + α(ξ⁻¹-ξ)·F(smoothed)
NEG_SWITCH = Laurent2.monomial(-2, 0)
NEG_SMOOTH = -(XI_INV_MINUS_XI.shift(dj=-1))
POS_SWITCH = Laurent2.monomial(2, 0)
POS_SMOOTH = XI_INV_MINUS_XI.shift(dj=1)
NEG_DESTAB = Laurent2.monomial(-1, -1, -1)
# 1 + αξ⁻¹
UNION_FACTOR = Laurent2({(0, 0): 1, (1, -1): 1})

EDGE_LABELS = {
    (NodeKind.SPLIT, -1): ("α⁻²", "−α⁻¹(ξ⁻¹−ξ)"),
    (NodeKind.SPLIT, 1): ("α²", "α(ξ⁻¹−ξ)"),
    NodeKind.DESTAB_POS: "1",
    NodeKind.DESTAB_NEG: "−α⁻¹ξ⁻¹",
    NodeKind.SPLIT_UNION: "(1+αξ⁻¹)",
}


def leaf_unlink(l: int, convention: LeafConvention = LeafConvention.FORCED) -> RationalInvariant:
    """
    F of the crossingless l-strand closed braid U^{⊔l}.

    Forced: α⁻¹ξ(1+α⁻¹ξ)^{l-1} / (1-ξ²)^l, the value the skein axioms force.
    Paper:  the same times ξ^{2(l-1)}, i.e. α⁻¹ξ(1+α⁻¹ξ)^{l-1}·Σ binom(T, l-1)ξ^{2T}.

    Raises:
        LeafError: If l < 1
    """
    if l < 1:
        raise LeafError(f"unlink needs at least one component, got {l}")
    base = Laurent2.monomial(-1, 1) * Laurent2({(0, 0): 1, (-1, 1): 1}) ** (l - 1)
    if LeafConvention(convention) is LeafConvention.PAPER:
        base = base.shift(dk=2 * (l - 1))
    return RationalInvariant.of(base, l)


def split_union_combine(
    f1: RationalInvariant,
    f2: RationalInvariant,
    convention: LeafConvention = LeafConvention.FORCED,
) -> RationalInvariant:
    """
    F of the split union B₁ ⊔ B₂ from F(B₁) and F(B₂): f1·f2·(1 + αξ⁻¹).
    Under the Paper convention an extra ξ² keeps split unions of unlinks
    equal to the Paper leaf values.
    """
    factor = UNION_FACTOR
    if LeafConvention(convention) is LeafConvention.PAPER:
        factor = factor.shift(dk=2)
    return f1 * f2 * factor


class SkeinMemo:
    """
    Shared cache of normalized F-values. Inserts are insert-if-absent;
    concurrent duplicate computation of one key is allowed.
    """

    def __init__(self):
        self._table: Dict[Tuple, RationalInvariant] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Tuple) -> Optional[RationalInvariant]:
        with self._lock:
            value = self._table.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put_if_absent(self, key: Tuple, value: RationalInvariant) -> RationalInvariant:
        with self._lock:
            return self._table.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._table.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._table)

    def stats(self) -> Dict[str, int]:
        with self._lock:
            return {"hits": self.hits, "misses": self.misses, "size": len(self._table)}


_default_memo = SkeinMemo()


def get_memo() -> SkeinMemo:
    """The process-wide memo cache."""
    return _default_memo


def set_memo(memo: SkeinMemo):
    global _default_memo
    _default_memo = memo


class TreeNode(BaseModel):
    index: int
    word: List[int]
    strands: int
    kind: NodeKind
    children: List[int] = Field(default_factory=list)
    annotation: Dict[str, Any] = Field(default_factory=dict)


class TreeRecord(BaseModel):
    """
    A transverse computation tree. Node 0 is the root. Identical subtrees
    are stored once and referenced by index from every parent.
    """
    convention: LeafConvention
    strategy: Strategy
    root: int = 0
    nodes: List[TreeNode] = Field(default_factory=list)


class _Evaluator:
    """One evaluation context: config, memo and the tree under construction."""

    def __init__(self, cfg: EvalConfig, memo: Optional[SkeinMemo]):
        self.cfg = cfg
        self.memo = memo if cfg.memo_enabled else None
        self.nodes: List[TreeNode] = []
        # key -> (value, node index) for subtrees already recorded
        self.recorded: Dict[Tuple, Tuple[RationalInvariant, int]] = {}

    @property
    def recording(self) -> bool:
        return self.cfg.record_tree

    def _key(self, w: BraidWord) -> Tuple:
        return (w.letters, w.strands, self.cfg.convention.value, self.cfg.strategy.value)

    def _node(self, w: BraidWord, kind: NodeKind, **annotation) -> Optional[int]:
        if not self.recording:
            return None
        index = len(self.nodes)
        self.nodes.append(TreeNode(index=index, word=list(w.letters), strands=w.strands,
                                   kind=kind, annotation=annotation))
        return index

    def _link(self, parent: Optional[int], *children: Optional[int]):
        if parent is not None:
            self.nodes[parent].children = [c for c in children if c is not None]

    # entry point for every (sub)word
    def evaluate(self, w: BraidWord) -> Tuple[RationalInvariant, Optional[int]]:
        c = canonical_form(w)
        key = self._key(c)
        if self.recording and key in self.recorded:
            value, index = self.recorded[key]
        else:
            value = None
            # recording bypasses the memo
            if self.memo is not None and not self.recording:
                value = self.memo.get(key)
                if value is not None:
                    logger.debug(f"memo hit [{c}] on {c.strands}")
                    return value, None
            value, index = self._dispatch(c)
            if self.memo is not None:
                value = self.memo.put_if_absent(key, value)
            if self.recording:
                self.recorded[key] = (value, index)
        if self.recording and c.letters != w.letters:
            parent = self._node(w, NodeKind.REWRITE, moves="cyclic free reduction and rotation",
                                target=list(c.letters))
            self._link(parent, index)
            return value, parent
        return value, index

    def _dispatch(self, w: BraidWord) -> Tuple[RationalInvariant, Optional[int]]:
        n = w.strands
        # Unlink leaf
        if not w.letters:
            node = self._node(w, NodeKind.LEAF, components=n)
            return leaf_unlink(n, self.cfg.convention), node

        negatives = [p for p, e in enumerate(w.letters) if e < 0]
        if self.cfg.strategy is Strategy.NEGATIVE_ELIM_FIRST and negatives:
            return self._skein(w, negatives[-1])

        # Split union or positive destabilization
        reduced = self._reduce_strands(w)
        if reduced is not None:
            return reduced

        if negatives:
            return self._skein(w, negatives[0])

        # Positive word: expose σ_i² or go to the staircase
        k = first_non_reduced_prefix(w)
        if k is not None:
            rewritten = exchange_rewrite(w, k)
            if rewritten.letters == w.letters:
                return self._skein(w, k)
            node = self._node(w, NodeKind.REWRITE, moves="braid relations (exchange)",
                              target=list(rewritten.letters),
                              braid_moves=self._move_count(w.letters[:k], rewritten.letters[:k], n))
            # σ_i² now sits at positions k-1, k; split the second one
            value, child = self._skein(rewritten, k)
            self._link(node, child)
            return value, node

        staircase = staircase_word(permutation(w))
        node = self._node(w, NodeKind.REWRITE, moves="braid relations (staircase)",
                          target=list(staircase.letters),
                          braid_moves=self._move_count(w.letters, staircase.letters, n))
        value, child = self._reduce_strands(staircase)
        self._link(node, child)
        return value, node

    def _move_count(self, a, b, n: int) -> Optional[int]:
        if not self.recording:
            return None
        path = braid_move_path(BraidWord(n, tuple(a)), BraidWord(n, tuple(b)))
        return len(path) - 1

    def _reduce_strands(self, w: BraidWord) -> Optional[Tuple[RationalInvariant, Optional[int]]]:
        """Split-union at an unused index, or destabilize a top index used once."""
        n = w.strands
        used = {abs(e) for e in w.letters}
        for i in range(1, n):
            if i not in used:
                return self._split_union(w, i)
        top = [p for p, e in enumerate(w.letters) if abs(e) == n - 1]
        if len(top) == 1:
            return self._destabilize(w, top[0])
        return None

    def _split_union(self, w: BraidWord, i: int) -> Tuple[RationalInvariant, Optional[int]]:
        n = w.strands
        left = BraidWord(i, tuple(e for e in w.letters if abs(e) < i))
        right = BraidWord(n - i, tuple((e - i) if e > 0 else (e + i) for e in w.letters if abs(e) > i))
        node = self._node(w, NodeKind.SPLIT_UNION, index=i, label=EDGE_LABELS[NodeKind.SPLIT_UNION])
        f1, c1 = self.evaluate(left)
        f2, c2 = self.evaluate(right)
        self._link(node, c1, c2)
        return split_union_combine(f1, f2, self.cfg.convention), node

    def _destabilize(self, w: BraidWord, position: int) -> Tuple[RationalInvariant, Optional[int]]:
        n = w.strands
        rotated = w.letters[position + 1:] + w.letters[:position + 1]
        positive = rotated[-1] > 0
        kind = NodeKind.DESTAB_POS if positive else NodeKind.DESTAB_NEG
        node = self._node(BraidWord(n, rotated), kind, rotation=position + 1, label=EDGE_LABELS[kind])
        value, child = self.evaluate(BraidWord(n - 1, rotated[:-1]))
        self._link(node, child)
        if not positive:
            value = value * NEG_DESTAB
        return value, node

    def _skein(self, w: BraidWord, position: int) -> Tuple[RationalInvariant, Optional[int]]:
        sign = 1 if w.letters[position] > 0 else -1
        switch_label, smooth_label = EDGE_LABELS[(NodeKind.SPLIT, sign)]
        node = self._node(w, NodeKind.SPLIT, position=position, sign=sign,
                          labels=[switch_label, smooth_label])
        switched, smoothed = conway_split(w, position)
        f_sw, c_sw = self.evaluate(switched)
        f_sm, c_sm = self.evaluate(smoothed)
        self._link(node, c_sw, c_sm)
        if sign < 0:
            return f_sw * NEG_SWITCH + f_sm * NEG_SMOOTH, node
        return f_sw * POS_SWITCH + f_sm * POS_SMOOTH, node


def eval_F(
    w: BraidWord,
    cfg: Optional[EvalConfig] = None,
    memo: Optional[SkeinMemo] = None,
) -> Tuple[RationalInvariant, Optional[TreeRecord]]:
    """
    Evaluate F for the closure of w.

    Args:
        w: The braid word
        cfg: Evaluation config (defaults: Forced, StaircaseFirst, memo on, no tree)
        memo: Memo cache (defaults to the process-wide one)

    Returns:
        (F value, TreeRecord when cfg.record_tree else None)
    """
    cfg = cfg or EvalConfig()
    evaluator = _Evaluator(cfg, memo if memo is not None else get_memo())
    value, root = evaluator.evaluate(w)
    record = None
    if cfg.record_tree:
        record = _rooted_at_zero(
            TreeRecord(convention=cfg.convention, strategy=cfg.strategy, nodes=evaluator.nodes),
            root,
        )
        logger.debug(f"recorded {len(record.nodes)} nodes for [{w}] on {w.strands}")
    logger.debug(f"eval_F [{w}] on {w.strands}: {value}")
    return value, record


def _rooted_at_zero(record: TreeRecord, root: int) -> TreeRecord:
    """Renumber nodes in preorder from the root so that node 0 is the root."""
    order: List[int] = []
    seen = set()
    stack = [root]
    while stack:
        i = stack.pop()
        if i in seen:
            continue
        seen.add(i)
        order.append(i)
        stack.extend(reversed(record.nodes[i].children))
    renumber = {old: new for new, old in enumerate(order)}
    nodes = []
    for old in order:
        n = record.nodes[old]
        nodes.append(n.model_copy(update={"index": renumber[old],
                                          "children": [renumber[c] for c in n.children]}))
    return TreeRecord(convention=record.convention, strategy=record.strategy, root=0, nodes=nodes)


_ARITY = {
    NodeKind.LEAF: 0,
    NodeKind.SPLIT: 2,
    NodeKind.DESTAB_POS: 1,
    NodeKind.DESTAB_NEG: 1,
    NodeKind.SPLIT_UNION: 2,
    NodeKind.REWRITE: 1,
}


def check_record(record: TreeRecord):
    """
    Structural checks shared by the F- and Q-level replays.

    Raises:
        TreeRecordError: On dangling children, wrong arity or unknown kinds
    """
    size = len(record.nodes)
    if not size:
        raise TreeRecordError("empty tree record")
    for position, node in enumerate(record.nodes):
        if node.index != position:
            raise TreeRecordError(f"node at position {position} has index {node.index}")
        try:
            kind = NodeKind(node.kind)
        except ValueError:
            raise TreeRecordError(f"unknown node kind {node.kind!r}")
        if len(node.children) != _ARITY[kind]:
            raise TreeRecordError(
                f"node {position} of kind {kind.value} has {len(node.children)} children"
            )
        for c in node.children:
            if not 0 <= c < size:
                raise TreeRecordError(f"node {position} has dangling child {c}")
            if c == position:
                raise TreeRecordError(f"node {position} is its own child")


def replay_order(record: TreeRecord) -> List[int]:
    """Node indices in an order where children come before parents."""
    check_record(record)
    order: List[int] = []
    state: Dict[int, int] = {}
    stack: List[Tuple[int, bool]] = [(record.root, False)]
    while stack:
        i, expanded = stack.pop()
        if expanded:
            state[i] = 2
            order.append(i)
            continue
        if state.get(i) == 2:
            continue
        if state.get(i) == 1:
            raise TreeRecordError(f"cycle through node {i}")
        state[i] = 1
        stack.append((i, True))
        for c in record.nodes[i].children:
            if state.get(c) != 2:
                stack.append((c, False))
    return order


def replay_tree(record: TreeRecord, convention: Optional[LeafConvention] = None) -> RationalInvariant:
    """
    Recompute the root value from leaves and node annotations only.

    Args:
        record: The tree
        convention: Leaf convention (defaults to the record's own)

    Returns:
        F at the root

    Raises:
        TreeRecordError: If the record is malformed
    """
    convention = LeafConvention(convention or record.convention)
    values: Dict[int, RationalInvariant] = {}
    for i in replay_order(record):
        node = record.nodes[i]
        kind = NodeKind(node.kind)
        kids = [values[c] for c in node.children]
        if kind is NodeKind.LEAF:
            if node.word:
                raise TreeRecordError(f"leaf node {i} has crossings")
            values[i] = leaf_unlink(node.strands, convention)
        elif kind is NodeKind.SPLIT:
            sign = node.annotation.get("sign")
            if sign == -1:
                values[i] = kids[0] * NEG_SWITCH + kids[1] * NEG_SMOOTH
            elif sign == 1:
                values[i] = kids[0] * POS_SWITCH + kids[1] * POS_SMOOTH
            else:
                raise TreeRecordError(f"split node {i} has no crossing sign")
        elif kind is NodeKind.DESTAB_POS:
            values[i] = kids[0]
        elif kind is NodeKind.DESTAB_NEG:
            values[i] = kids[0] * NEG_DESTAB
        elif kind is NodeKind.SPLIT_UNION:
            values[i] = split_union_combine(kids[0], kids[1], convention)
        else:
            values[i] = kids[0]
    return values[record.root]
