"""
Serialization of transverse computation trees.
Writes TreeRecord as JSON (sorted keys) or as a graphviz DOT digraph whose
edges carry the F-level factor or the Q-level operator of each branch.

After exporting to 'tree.gv' the graph can be rendered with:

    dot -Tpng -O tree.gv
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Union

from pydantic import ValidationError

from ..skein_f import EDGE_LABELS, NodeKind, TreeRecord, TreeRecordError

logger = logging.getLogger(__name__)

FORMATS = ("json", "dot")

# Operator labels on the branches of the Q-level walk
Q_EDGE_LABELS = {
    (NodeKind.SPLIT, -1): ("S_α", "−S_α∘Δ_α"),
    (NodeKind.SPLIT, 1): ("S_α⁻¹", "Δ_α"),
    NodeKind.DESTAB_POS: "id",
    NodeKind.DESTAB_NEG: "−α⁻¹·(T↦T+1)",
    NodeKind.SPLIT_UNION: "pin",
}

_SHAPES = {
    NodeKind.LEAF: "box",
    NodeKind.REWRITE: "ellipse",
    NodeKind.SPLIT: "circle",
    NodeKind.DESTAB_POS: "diamond",
    NodeKind.DESTAB_NEG: "diamond",
    NodeKind.SPLIT_UNION: "doublecircle",
}


class TreeExportError(Exception):
    """Raised for unknown export formats."""
    pass


def to_json(record: TreeRecord) -> str:
    """JSON text of the record with sorted keys and a trailing newline."""
    return json.dumps(record.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> TreeRecord:
    """
    Parse a record written by ``to_json``.

    Raises:
        TreeRecordError: If the text is not a valid record
    """
    try:
        return TreeRecord.model_validate_json(text)
    except (ValidationError, ValueError) as e:
        raise TreeRecordError(f"invalid tree record: {e}")


def _edge_labels(kind: NodeKind, sign: int, level: str) -> List[str]:
    table = Q_EDGE_LABELS if level == "Q" else EDGE_LABELS
    if kind is NodeKind.SPLIT:
        return list(table[(kind, sign)])
    if kind is NodeKind.SPLIT_UNION:
        return [table[kind], table[kind]]
    if kind is NodeKind.REWRITE:
        return ["moves"]
    if kind in table:
        return [table[kind]]
    return []


def _node_label(node) -> str:
    word = " ".join(str(e) for e in node.word) or "∅"
    return f"{NodeKind(node.kind).value}\\n[{word}] / {node.strands}"


def to_dot(record: TreeRecord, level: str = "F") -> str:
    """
    DOT digraph with one node per record entry.

    Args:
        record: The tree
        level: "F" labels edges with skein factors, "Q" with operators

    Returns:
        DOT source text
    """
    lines = ["digraph tree {", '\tnode [fontname="Helvetica", fontsize=10];']
    for node in record.nodes:
        kind = NodeKind(node.kind)
        lines.append(f'\t"{node.index}" [label="{_node_label(node)}", shape={_SHAPES[kind]}];')
    for node in record.nodes:
        kind = NodeKind(node.kind)
        labels = _edge_labels(kind, node.annotation.get("sign", 0), level)
        for child, label in zip(node.children, labels):
            style = "dashed" if kind is NodeKind.REWRITE else "solid"
            lines.append(f'\t"{node.index}" -> "{child}" [label="{label}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tree(record: TreeRecord, fmt: str = "json", level: str = "F") -> str:
    """
    Render a record in the requested format.

    Raises:
        TreeExportError: If fmt is not one of FORMATS
    """
    if fmt == "json":
        return to_json(record)
    if fmt == "dot":
        return to_dot(record, level)
    raise TreeExportError(f"unknown tree format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_tree(record: TreeRecord, path: Union[str, Path], fmt: str = "json", level: str = "F") -> Path:
    """Write the rendered record to path and return the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(export_tree(record, fmt, level), encoding="utf-8")
    logger.info(f"Wrote {fmt} tree with {len(record.nodes)} nodes to {path}")
    return path


def kind_counts(record: TreeRecord) -> Dict[str, int]:
    """Number of nodes of each kind."""
    counts: Dict[str, int] = {}
    for node in record.nodes:
        key = NodeKind(node.kind).value
        counts[key] = counts.get(key, 0) + 1
    return dict(sorted(counts.items()))
