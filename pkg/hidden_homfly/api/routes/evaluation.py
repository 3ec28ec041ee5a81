"""
Evaluation endpoints: single-word reports and computation trees.

Input errors answer 422 with the error result dict as body; engine failures
answer 500 with the same shape.
"""

import logging
from typing import List, Literal, Optional, Union

from fastapi import APIRouter
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ... import __version__
from ...tools.braidword import BraidWordError
from ...tools.evaluation import WordEvaluationTool
from ...tools.integrations.tree_export import export_tree
from ...tools.skein_f import EvalConfig, LeafConvention, Strategy, eval_F, replay_tree
from ...tools.utils.word_validator import braid_from_letters, parse_braid_word

logger = logging.getLogger(__name__)

router = APIRouter()


class EvalRequest(BaseModel):
    word: Union[str, List[int]] = Field(..., description='Letters as text ("1 -2 1") or a list of integers')
    strands: int
    convention: LeafConvention = LeafConvention.FORCED
    strategy: Strategy = Strategy.STAIRCASE_FIRST
    tmin: Optional[int] = None
    tmax: Optional[int] = None
    probe_floor: Optional[int] = None


class TreeRequest(BaseModel):
    word: Union[str, List[int]]
    strands: int
    format: Literal["json", "dot"] = "json"
    level: Literal["F", "Q"] = "F"
    convention: LeafConvention = LeafConvention.FORCED
    strategy: Strategy = Strategy.STAIRCASE_FIRST


def _error(tool: str, code: str, message: str, status_code: int) -> JSONResponse:
    body = {"status": "error", "tool": tool, "error": {"code": code, "message": message}, "data": None}
    return JSONResponse(status_code=status_code, content=body)


@router.get("/health")
async def health():
    return {"status": "healthy", "version": __version__}


@router.post("/eval")
def evaluate(request: EvalRequest):
    cfg = EvalConfig(convention=request.convention, strategy=request.strategy)
    report = WordEvaluationTool(cfg).evaluate_word(
        request.word, request.strands, tmin=request.tmin, tmax=request.tmax,
        probe_floor=request.probe_floor,
    )
    if report["status"] == "success":
        return report
    status_code = 422 if report["error"]["code"] == "INVALID_WORD" else 500
    return JSONResponse(status_code=status_code, content=report)


@router.post("/tree")
def tree(request: TreeRequest):
    try:
        if isinstance(request.word, str):
            w = parse_braid_word(request.word, request.strands)
        else:
            w = braid_from_letters(request.word, request.strands)
    except BraidWordError as e:
        logger.warning(f"Invalid word for /tree: {e}")
        return _error("tree", "INVALID_WORD", str(e), 422)

    cfg = EvalConfig(convention=request.convention, strategy=request.strategy, record_tree=True)
    try:
        value, record = eval_F(w, cfg)
        content = export_tree(record, request.format, request.level)
        matches = replay_tree(record) == value
    except Exception as e:
        logger.error(f"Tree export failed for [{w}]: {e}")
        return _error("tree", "ENGINE_ERROR", str(e), 500)

    if not matches:
        logger.error(f"Replay mismatch for [{w}] on {w.strands}")
    return {
        "status": "success",
        "format": request.format,
        "content": content,
        "replay_matches": matches,
        "nodes": len(record.nodes),
    }
