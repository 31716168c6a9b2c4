"""System endpoints (health check, etc.)."""

from fastapi import APIRouter

from api import __version__
from utils.settings import get_settings

router = APIRouter(prefix="/api/v1", tags=["system"])


@router.get("/health")
async def health_check():
    """
    Health check endpoint.

    Returns:
        Health status and version information
    """
    settings = get_settings()
    return {
        "status": "healthy",
        "version": __version__,
        "classify_workers": settings.classify_workers,
    }
