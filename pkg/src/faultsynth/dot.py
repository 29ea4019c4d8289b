"""Graphviz export.  Output depends only on the automaton, so repeated runs
produce identical bytes."""

from __future__ import annotations

from typing import Iterable

from .automata import Dfa


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: Dfa, highlight: Iterable[str] = (), title: str | None = None) -> str:
    """Render ``d``; states whose label is in ``highlight`` are drawn dashed
    and filled, marked states get a double circle."""
    flagged = set(highlight)
    all_marked = d.marked == frozenset(d.states)
    lines = [f"digraph {_quote(title or d.name or 'automaton')} {{", "  rankdir=LR;",
             '  node [shape=circle, fontname="Helvetica"];',
             '  edge [fontname="Helvetica"];',
             '  __start [shape=point, label=""];']
    for q in d.states:
        attrs = [f"label={_quote(d.label(q))}"]
        if q in d.marked and not all_marked:
            attrs.append("shape=doublecircle")
        if d.label(q) in flagged:
            attrs.append('style="dashed,filled"')
            attrs.append('fillcolor="lightgrey"')
        lines.append(f"  s{q} [{', '.join(attrs)}];")
    lines.append(f"  __start -> s{d.initial};")
    grouped: dict[tuple[int, int], list[str]] = {}
    for s, e, t in d.transitions():
        grouped.setdefault((s, t), []).append(e)
    for (s, t), evs in sorted(grouped.items()):
        unobs = all(e in d.alphabet and not d.alphabet[e].observable for e in evs)
        style = ", style=dashed" if unobs else ""
        lines.append(f"  s{s} -> s{t} [label={_quote(', '.join(evs))}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
