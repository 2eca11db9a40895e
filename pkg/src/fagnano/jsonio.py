"""Deterministic JSON emission: fixed key order, floats at 17 significant digits.

The stock ``json`` module formats floats with ``repr``, whose digit count
varies by value; reports here must be byte-identical across runs and
platforms, so this tiny serializer pins the float format instead.  Input keys
are emitted in insertion order; NaN and infinities are rejected.
"""

from __future__ import annotations

import json
import math


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {value} not representable")
    return format(value, ".17g")


def _emit(value, pieces: list[str], indent: int) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        pieces.append("null")
    elif value is True:
        pieces.append("true")
    elif value is False:
        pieces.append("false")
    elif isinstance(value, int):
        pieces.append(str(value))
    elif isinstance(value, float):
        pieces.append(format_float(value))
    elif isinstance(value, str):
        pieces.append(json.dumps(value))
    elif isinstance(value, dict):
        if not value:
            pieces.append("{}")
            return
        pieces.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            pieces.append(f"{inner}{json.dumps(str(key))}: ")
            _emit(item, pieces, indent + 1)
            pieces.append(",\n" if i < len(value) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            pieces.append("[]")
            return
        pieces.append("[\n")
        for i, item in enumerate(value):
            pieces.append(inner)
            _emit(item, pieces, indent + 1)
            pieces.append(",\n" if i < len(value) - 1 else "\n")
        pieces.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(value) -> str:
    """Serialize to pretty-printed JSON text with a trailing newline."""
    pieces: list[str] = []
    _emit(value, pieces, 0)
    return "".join(pieces) + "\n"
