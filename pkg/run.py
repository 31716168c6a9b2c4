"""Run the FastAPI application."""

import os

import uvicorn
from dotenv import load_dotenv

from utils.settings import get_settings

load_dotenv()

if __name__ == "__main__":
    settings = get_settings()
    # hosting platforms provide PORT; fall back to API_PORT
    port = int(os.getenv("PORT", settings.api_port))

    uvicorn.run(
        "api.main:app",
        host=settings.api_host,
        port=port,
        log_level=settings.log_level.lower()
    )
