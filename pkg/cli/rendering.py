"""Output encodings: canonical JSON tree, flat CSV, human table."""

import json
from typing import Any, Dict, List

import pandas as pd

from api.models.common import OutputEnvelope
from utils.hashing import canonical_json


def flatten_value(value: Any) -> Any:
    """Scalar rendering of a cell; lists become space-separated integers."""
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return canonical_json(value)
    if value is None:
        return ""
    return value


def _frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    flat = [{key: flatten_value(val) for key, val in row.items()} for row in rows]
    # object dtype keeps unbounded integers exact
    return pd.DataFrame(flat, dtype=object)


def render_json(envelope: OutputEnvelope) -> str:
    return canonical_json(envelope.model_dump(mode="json")) + "\n"


def render_csv(rows: List[Dict[str, Any]]) -> str:
    return _frame(rows).to_csv(index=False, lineterminator="\n")


def render_table(envelope: OutputEnvelope, rows: List[Dict[str, Any]], notes: List[str]) -> str:
    lines = [f"{envelope.command} (symprod {envelope.version})"]
    for key in sorted(envelope.input):
        lines.append(f"  {key}: {flatten_value(envelope.input[key])}")
    lines.append("")
    if rows:
        lines.append(_frame(rows).to_string(index=False))
    lines.extend(notes)
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Dict[str, Any]:
    """Inverse of render_json."""
    return json.loads(text)
