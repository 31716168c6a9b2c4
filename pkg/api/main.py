"""FastAPI application main file."""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from dotenv import load_dotenv

from api import __version__
from api.models.common import ErrorDetail, ErrorResponse
from api.routes import distinguisher, divisors, partitions, poincare, system
from utils.exceptions import (
    CertificateError,
    IndistinguishableError,
    InvalidInputError,
    OutOfRegimeError,
    SymprodError,
)
from utils.logging import get_logger, setup_logging
from utils.settings import get_settings

# Load environment variables
load_dotenv()

settings = get_settings()
setup_logging(log_level=settings.log_level, log_file=settings.log_file)
logger = get_logger(__name__)

app = FastAPI(
    title="Symprod API",
    description="Invariants and non-isomorphism certificates for symmetric products of curves",
    version=__version__
)

app.include_router(system.router)
app.include_router(partitions.router)
app.include_router(poincare.router)
app.include_router(distinguisher.router)
app.include_router(divisors.router)


def _error_body(code: str, message: str) -> dict:
    return ErrorResponse(error=ErrorDetail(code=code, message=message)).model_dump()


def _status_for(exc: SymprodError) -> int:
    if isinstance(exc, (InvalidInputError, OutOfRegimeError)):
        return 400
    if isinstance(exc, (IndistinguishableError, CertificateError)):
        return 422
    return 500


@app.exception_handler(SymprodError)
async def symprod_exception_handler(request: Request, exc: SymprodError):
    logger.error(f"Symprod error: {exc}")
    return JSONResponse(
        status_code=_status_for(exc),
        content=_error_body(exc.__class__.__name__, str(exc))
    )


@app.exception_handler(Exception)
async def general_exception_handler(request: Request, exc: Exception):
    logger.error(f"Unhandled exception: {exc}", exc_info=True)
    return JSONResponse(
        status_code=500,
        content=_error_body("INTERNAL_ERROR", "An internal error occurred")
    )
