"""JSON automaton files.

A file holds ``name``, ``events`` (objects with ``name``, ``observable``,
``controllable``, ``fault``), ``states`` (names), ``initial``, an optional
``marked`` list (absent means every state is marked) and ``transitions`` as
``[source, event, target]`` triples.  Extra keys are preserved on load in
``extras`` and ignored otherwise.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .automata import Alphabet, Dfa, Event
from .errors import FaultSynthError, ParseError

REQUIRED = ("name", "events", "states", "initial", "transitions")


def _state_names(d: Dfa) -> dict[int, str]:
    names: dict[int, str] = {}
    used: set[str] = set()
    for q in d.states:
        n = d.label(q)
        if n in used:
            n = f"{n}#{q}"
        used.add(n)
        names[q] = n
    return names


def automaton_to_dict(d: Dfa, extras: dict[str, Any] | None = None) -> dict[str, Any]:
    names = _state_names(d)
    out: dict[str, Any] = {
        "name": d.name,
        "events": [
            {"name": e.name, "observable": e.observable, "controllable": e.controllable,
             "fault": e.fault}
            for e in sorted(d.alphabet, key=lambda e: e.name)
        ],
        "states": [names[q] for q in d.states],
        "initial": names[d.initial],
    }
    if d.marked != frozenset(d.states):
        out["marked"] = [names[q] for q in d.states if q in d.marked]
    out["transitions"] = [[names[s], e, names[t]] for s, e, t in d.transitions()]
    if extras:
        out.update(extras)
    return out


def dumps_automaton(d: Dfa, extras: dict[str, Any] | None = None) -> str:
    return json.dumps(automaton_to_dict(d, extras), indent=2, ensure_ascii=False) + "\n"


def save_automaton(d: Dfa, path: str | Path, extras: dict[str, Any] | None = None) -> None:
    Path(path).write_text(dumps_automaton(d, extras), encoding="utf-8")


def automaton_from_dict(data: Any) -> Dfa:
    if not isinstance(data, dict):
        raise ParseError("automaton file must hold a JSON object")
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    try:
        events = []
        for raw in data["events"]:
            if isinstance(raw, str):
                raw = {"name": raw}
            events.append(Event(str(raw["name"]), bool(raw.get("observable", True)),
                                bool(raw.get("controllable", True)), bool(raw.get("fault", False))))
        alphabet = Alphabet(events)
        states = [str(s) for s in data["states"]]
        if len(set(states)) != len(states):
            raise ParseError("duplicate state name")
        ids = {s: i for i, s in enumerate(states)}

        def sid(name: Any) -> int:
            try:
                return ids[str(name)]
            except KeyError:
                raise ParseError(f"unknown state {name!r}") from None

        delta: dict[tuple[int, str], int] = {}
        for tr in data["transitions"]:
            if not isinstance(tr, (list, tuple)) or len(tr) != 3:
                raise ParseError(f"transition must be [source, event, target], got {tr!r}")
            src, ev, tgt = sid(tr[0]), str(tr[1]), sid(tr[2])
            if (src, ev) in delta:
                raise ParseError(f"duplicate transition from {tr[0]!r} on {ev!r}")
            delta[(src, ev)] = tgt
        marked = None if data.get("marked") is None else [sid(s) for s in data["marked"]]
        return Dfa(alphabet, delta, sid(data["initial"]), marked, range(len(states)),
                   dict(enumerate(states)), None, str(data["name"]))
    except ParseError:
        raise
    except FaultSynthError as exc:
        raise ParseError(str(exc)) from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed automaton file: {exc}") from exc


def loads_automaton(text: str) -> Dfa:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return automaton_from_dict(data)


def load_automaton(path: str | Path) -> Dfa:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads_automaton(text)


def load_extras(path: str | Path) -> dict[str, Any]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return {k: v for k, v in data.items() if k not in REQUIRED and k != "marked"}
