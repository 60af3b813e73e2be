"""Canonical report serialization: sorted keys, fixed float formatting.

Reports are emitted as pretty-printed JSON with keys sorted and every
float rendered at 12 significant digits with trailing zeros trimmed, so
byte-for-byte diffs of reports are meaningful.
"""

from __future__ import annotations

import hashlib
import json
import math
import numbers

SCHEMA_VERSION = 1


def format_float(x: float) -> str:
    """12 significant digits, trailing zeros trimmed, -0 normalised."""
    x = float(x)
    if not math.isfinite(x):
        return json.dumps(str(x))  # quoted, so the document stays valid JSON
    if x == 0.0:
        x = 0.0
    return format(x, ".12g")


def canonical_json(value, indent: int = 0) -> str:
    """Deterministic JSON rendering; dict keys sorted, floats via format_float."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = []
        for key in sorted(value, key=str):
            items.append(f"{inner}{json.dumps(str(key))}: {canonical_json(value[key], indent + 1)}")
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{inner}{canonical_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(float(value))
    if value is None:
        return "null"
    return json.dumps(str(value))


def payload_digest(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def make_report(command: str, options: dict, inputs: dict, results: dict,
                eps: float | None = None) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "options": options,
        "inputs": inputs,
        "results": results,
    }
    if eps is not None:
        report["eps"] = eps
    return report


def render_report(report: dict) -> str:
    return canonical_json(report) + "\n"
