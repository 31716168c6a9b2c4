"""Runtime settings loaded from the environment or a .env file."""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings. Every field has a default."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    log_level: str = "WARNING"
    log_file: Optional[str] = None
    classify_workers: int = Field(default=1, ge=1)
    api_host: str = "127.0.0.1"
    api_port: int = 8000


@lru_cache
def get_settings() -> Settings:
    return Settings()
