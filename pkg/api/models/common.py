"""Common models used across endpoints and CLI output."""

from typing import Any, Dict, Optional

from pydantic import BaseModel


class ErrorDetail(BaseModel):
    """Error detail model."""
    code: str
    message: str
    details: Optional[dict] = None


class ErrorResponse(BaseModel):
    """Standard error response."""
    error: ErrorDetail


class OutputEnvelope(BaseModel):
    """Wrapper around every CLI result."""
    command: str
    input: Dict[str, Any]
    result: Dict[str, Any]
    version: str
