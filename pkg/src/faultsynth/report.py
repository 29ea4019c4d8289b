"""Machine-readable reports (schema version "1").

Keys are emitted in a fixed order so that identical runs give identical
bytes.  Timing is only recorded on request.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .languages import Projection, Witness, format_word

SCHEMA_VERSION = "1"


def witness_dict(w: Witness | None, p: Projection | None) -> dict[str, str] | None:
    if w is None:
        return None
    out = {"s": format_word(w.s)}
    if p is not None:
        out["P(s)"] = format_word(p(w.s))
    out["t"] = format_word(w.t)
    if p is not None:
        out["P(t)"] = format_word(p(w.t))
    if w.note:
        out["note"] = w.note
    return out


def make_report(
    command: Sequence[str],
    *,
    property: str,
    verdict: bool | None = None,
    result: str | None = None,
    parameters: dict[str, Any] | None = None,
    witness: Witness | None = None,
    projection: Projection | None = None,
    trace: Sequence[dict[str, Any]] | None = None,
    notes: Sequence[str] = (),
    extra: dict[str, Any] | None = None,
    timing_ms: float | None = None,
) -> dict[str, Any]:
    rep: dict[str, Any] = {
        "version": SCHEMA_VERSION,
        "command": list(command),
        "property": property,
        "verdict": verdict,
        "result": result,
        "parameters": dict(parameters or {}),
        "witness": witness_dict(witness, projection),
    }
    if trace is not None:
        rep["trace"] = list(trace)
    if extra:
        rep.update(extra)
    rep["notes"] = list(notes)
    rep["timing_ms"] = None if timing_ms is None else round(timing_ms, 3)
    return rep


def dumps_report(rep: dict[str, Any]) -> str:
    return json.dumps(rep, indent=2, ensure_ascii=False) + "\n"
