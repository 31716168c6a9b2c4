"""Shared pytest fixtures."""

import sys
from pathlib import Path

import pytest

# Add repository root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.settings import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Settings are cached per process; clear them around every test."""
    monkeypatch.delenv("CLASSIFY_WORKERS", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture(params=[1, 2, 3])
def genus(request):
    return request.param
