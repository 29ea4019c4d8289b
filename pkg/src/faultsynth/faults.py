"""Fault-derived languages of a plant.

A plant is refined by a three-phase fault monitor so that each state knows
whether the strings reaching it are fault-free, end in a fault, or contain
an earlier fault.  Every language below is then a marking of that refinement
or a product of it with an observation counter.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum

from .automata import Dfa, LangRef, explore, product, empty_language
from .languages import (
    Projection,
    concat_sigma_star_within,
    inverse_project,
    prefix_closure,
    project,
    right_quotient,
    sigma_o_bounded,
)


class Phase(IntEnum):
    NO_FAULT = 0
    JUST_FAULTED = 1
    POST_FAULT = 2


@dataclass(frozen=True)
class FaultRefinedPlant:
    refined: Dfa
    origin: Dfa
    phases: tuple[Phase, ...]

    def states_in(self, *phases: Phase) -> frozenset[int]:
        return frozenset(q for q in self.refined.states if self.phases[q] in phases)

    def origin_state(self, q: int) -> int:
        return self.refined.origin(q)[0]


def _next_phase(phase: Phase, is_fault: bool) -> Phase:
    if is_fault:
        return Phase.JUST_FAULTED
    return Phase.NO_FAULT if phase == Phase.NO_FAULT else Phase.POST_FAULT


def fault_refine(g: Dfa) -> FaultRefinedPlant:
    faults = g.alphabet.faults

    def step(key):
        x, ph = key
        for e, x2 in g.out(x):
            yield e, (x2, _next_phase(ph, e in faults))

    refined, keys = explore(g.alphabet, (g.initial, Phase.NO_FAULT), step,
                            lambda k: k[0] in g.marked, None, g.name)
    per_state: dict[int, int] = {}
    for x, _ in keys:
        per_state[x] = per_state.get(x, 0) + 1
    tag = {Phase.NO_FAULT: "n", Phase.JUST_FAULTED: "F", Phase.POST_FAULT: "f"}
    labels = {
        i: g.label(x) if per_state[x] == 1 else f"{g.label(x)}{tag[ph]}"
        for i, (x, ph) in enumerate(keys)
    }
    refined = Dfa(refined.alphabet, {(s, e): t for s, e, t in refined.transitions()},
                  refined.initial, refined.marked, refined.states, labels,
                  {i: k for i, k in enumerate(keys)}, g.name)
    return FaultRefinedPlant(refined, g, tuple(ph for _, ph in keys))


def faulty_language(g: Dfa) -> LangRef:
    fr = fault_refine(g)
    return LangRef(fr.refined.with_marked(fr.states_in(Phase.JUST_FAULTED, Phase.POST_FAULT)), g)


def non_faulty_language(g: Dfa) -> LangRef:
    fr = fault_refine(g)
    return LangRef(fr.refined.with_marked(fr.states_in(Phase.NO_FAULT)), g)


def psi(g: Dfa) -> LangRef:
    """Plant strings that end with a fault event."""
    fr = fault_refine(g)
    return LangRef(fr.refined.with_marked(fr.states_in(Phase.JUST_FAULTED)), g)


def psi_minus_k(g: Dfa, k: int) -> LangRef:
    """Strings observationally equal to a point at most ``k`` observations
    before a fault, extended forward inside the prefixes of fault-ending
    strings."""
    if k < 0:
        raise ValueError("k must be non-negative")
    fault_ending = psi(g).recognizer
    before = right_quotient(fault_ending, sigma_o_bounded(g.alphabet, k, "<="))
    seen = inverse_project(project(before, Projection.observable(g.alphabet)), g.alphabet)
    prefixes = prefix_closure(LangRef(fault_ending)).recognizer
    return LangRef(concat_sigma_star_within(LangRef(seen, prefixes)).recognizer, g)


def l_f_geq(g: Dfa, n: int) -> LangRef:
    """Faulty strings with at least ``n`` observations in total."""
    return LangRef(product(faulty_language(g).recognizer, sigma_o_bounded(g.alphabet, n, ">=")), g)


def l_f_lt(g: Dfa, n: int) -> LangRef:
    """Prefixes of faulty strings with fewer than ``n`` observations."""
    if n <= 0:
        return LangRef(empty_language(g.alphabet), g)
    closure = prefix_closure(faulty_language(g)).recognizer
    return LangRef(product(closure, sigma_o_bounded(g.alphabet, n - 1, "<=")), g)


def l_psi_geq(g: Dfa, n: int) -> LangRef:
    """Faulty strings with at least ``n`` observations after the first fault."""
    faults = g.alphabet.faults
    obs = g.alphabet.observable

    def step(key):
        x, faulted, count = key
        for e, x2 in g.out(x):
            if faulted:
                yield e, (x2, True, min(n, count + (e in obs)))
            else:
                yield e, (x2, e in faults, 0)

    out, _ = explore(g.alphabet, (g.initial, False, 0), step,
                     lambda k: k[1] and k[2] >= n, lambda k: g.label(k[0]), g.name)
    return LangRef(out, g)


def min_fault_observations(g: Dfa) -> int | None:
    """Fewest observations on any fault-ending string; ``None`` if there is none."""
    fr = fault_refine(g)
    r = fr.refined
    target = fr.states_in(Phase.JUST_FAULTED)
    if not target:
        return None
    obs = g.alphabet.observable
    # 0-1 BFS: observable edges cost 1
    dist = {r.initial: 0}
    dq = deque([r.initial])
    while dq:
        q = dq.popleft()
        for e, t in r.out(q):
            w = dist[q] + (1 if e in obs else 0)
            if w < dist.get(t, 1 << 60):
                dist[t] = w
                if e in obs:
                    dq.append(t)
                else:
                    dq.appendleft(t)
    return min(dist[q] for q in target if q in dist)
