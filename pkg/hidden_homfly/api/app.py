"""
FastAPI application.

    uvicorn hidden_homfly.api.app:app --port 8000
"""

import logging

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import __version__
from ..tools.config import get_config
from .middleware import log_requests
from .routes import router

logger = logging.getLogger(__name__)


def create_app() -> FastAPI:
    get_config()
    app = FastAPI(
        title="hidden-homfly",
        version=__version__,
        description="Transverse HOMFLYPT invariants of closed braids and their hidden polynomials.",
    )
    app.middleware("http")(log_requests)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        logger.warning(f"Rejected {request.url.path}: {exc.errors()}")
        body = {
            "status": "error",
            "tool": request.url.path.strip("/") or "api",
            "error": {"code": "INVALID_WORD", "message": str(exc.errors())},
            "data": None,
        }
        return JSONResponse(status_code=422, content=body)

    app.include_router(router)
    return app


app = create_app()
