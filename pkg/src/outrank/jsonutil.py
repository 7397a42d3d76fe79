"""Deterministic JSON serialisation with fixed float formatting.

Exports must be byte-identical across runs, so floats are rendered with a
fixed rule (six significant digits, no negative zero) and dict insertion
order is preserved as-is.
"""

from __future__ import annotations

import json
import math

SIGNIFICANT_DIGITS = 6


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialise non-finite float {value!r}")
    if value == 0.0:
        return "0"
    return format(value, f".{SIGNIFICANT_DIGITS}g")


def dump_json(obj) -> str:
    parts: list[str] = []
    _write(obj, parts)
    return "".join(parts)


def _write(obj, parts: list[str]) -> None:
    if obj is None:
        parts.append("null")
    elif isinstance(obj, bool):
        parts.append("true" if obj else "false")
    elif isinstance(obj, str):
        parts.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        parts.append(format_float(obj))
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, item in enumerate(obj):
            if i:
                parts.append(", ")
            _write(item, parts)
        parts.append("]")
    elif isinstance(obj, dict):
        parts.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            if i:
                parts.append(", ")
            parts.append(json.dumps(key, ensure_ascii=False))
            parts.append(": ")
            _write(value, parts)
        parts.append("}")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__} to JSON")
