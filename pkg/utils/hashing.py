"""Digest utilities for canonical payloads."""

import hashlib
import json
from typing import Any, Union


def hash_data(data: Union[str, bytes]) -> str:
    """
    Compute SHA256 hash of data.

    Args:
        data: String or bytes data

    Returns:
        SHA256 hash as hex string
    """
    if isinstance(data, str):
        data = data.encode('utf-8')
    return hashlib.sha256(data).hexdigest()


def canonical_json(payload: Any) -> str:
    """Serialize a JSON tree with sorted keys and no insignificant whitespace."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def hash_payload(payload: Any) -> str:
    """SHA256 of the canonical JSON rendering of a payload."""
    return hash_data(canonical_json(payload))
