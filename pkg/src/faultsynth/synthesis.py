"""Supervisor synthesis for prognosis and diagnosis.

The plant is refined until the critical language ``M`` is recognized by a
set of states ``X_m`` and the observer cells partition the state set.  A
supervisor is then a state subset of that refinement, shrunk to a fixpoint:

* drop states whose observer cell mixes ``X_m`` with its complement,
* repeatedly drop states that can leak outside through uncontrollable events
  or that share a cell with a dropped state, then unreachable ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .automata import (
    Dfa,
    LangRef,
    explore,
    generated,
    minimize,
    product,
    reachable,
    spa_refine,
)
from .faults import Phase, _next_phase, l_f_geq
from .languages import (
    Projection,
    Witness,
    is_controllable,
    is_normal,
    is_pre_normal,
    observation_inclusion,
    prefix_closure,
    supremal_prefix_closed_subset,
)
from .verification import (
    ObserverAutomaton,
    check_psi_projection_finite,
    critical_nonfaulty,
    observer,
    require_live_convergent,
)


@dataclass(frozen=True)
class Prognosis:
    k: int = 0

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")

    def __str__(self) -> str:
        return f"prognosis(k={self.k})"


@dataclass(frozen=True)
class Diagnosis:
    def __str__(self) -> str:
        return "diagnosis"


Mode = Prognosis | Diagnosis


@dataclass(frozen=True)
class SynthesisProblem:
    plant: Dfa
    mode: Mode
    uncontrollable: frozenset[str] | None = None
    projection: Projection | None = None
    force: bool = False

    def __post_init__(self) -> None:
        declared = self.plant.alphabet.uncontrollable
        unc = declared if self.uncontrollable is None else frozenset(self.uncontrollable)
        if not declared <= unc:
            raise ValueError("uncontrollable set must contain every uncontrollable event")
        object.__setattr__(self, "uncontrollable", unc)
        p = self.projection or Projection.observable(self.plant.alphabet)
        if p.target != self.plant.alphabet.observable:
            raise ValueError("projection must erase exactly the unobservable events")
        object.__setattr__(self, "projection", p)


@dataclass(frozen=True)
class TraceEntry:
    step: str
    removed: tuple[str, ...]
    size: int


@dataclass(frozen=True)
class SynthesisResult:
    supervisor: Dfa | None
    iterations: int
    trace: tuple[TraceEntry, ...]
    h1: Dfa
    maximality_guaranteed: bool = True
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def no_solution(self) -> bool:
        return self.supervisor is None


@dataclass(frozen=True)
class _Prepared:
    h1: Dfa
    x_m: frozenset[int]
    x_bad: frozenset[int]


# ------------------------------------------------------------ preparation
def critical_language(problem: SynthesisProblem) -> LangRef:
    g = problem.plant
    if isinstance(problem.mode, Diagnosis):
        return l_f_geq(g, observer(g).n_cells)
    return supremal_prefix_closed_subset(critical_nonfaulty(g, problem.mode.k))


def _prepare(problem: SynthesisProblem) -> _Prepared:
    """Refine the plant so that membership in the critical language ``M`` is
    a state property.

    In prognosis mode the recognizer is that of the fault-free strings outside
    the danger zone, together with a flag recording whether some prefix left
    that language.  ``M`` is the flag-free part; the flagged members
    (``x_bad``) are strings no valid closed loop may contain, since the
    critical part of the closed loop must stay prefix-closed.
    """
    g = problem.plant
    require_live_convergent(g, problem.force)
    prognosis = isinstance(problem.mode, Prognosis)
    if prognosis:
        rec = minimize(critical_nonfaulty(g, problem.mode.k).recognizer)
    else:
        rec = minimize(critical_language(problem).recognizer)
    faults = g.alphabet.faults

    def member(r) -> bool:
        return r is not None and r in rec.marked

    def step(key):
        x, ph, r, left = key
        for e, x2 in g.out(x):
            r2 = None if r is None else rec.delta(r, e)
            yield e, (x2, _next_phase(ph, e in faults), r2, left or (prognosis and not member(r2)))

    start = (g.initial, Phase.NO_FAULT, rec.initial, prognosis and not member(rec.initial))
    mid, keys = explore(g.alphabet, start, step, lambda k: member(k[2]) and not k[3])
    spa = spa_refine(mid)
    origin = {q: keys[spa.origin(q)[0]][0] for q in spa.states}
    bad = frozenset(q for q in spa.states
                    if member(keys[spa.origin(q)[0]][2]) and keys[spa.origin(q)[0]][3])
    copies: dict[int, int] = {}
    labels = {}
    for q in spa.states:
        n = copies.get(origin[q], 0)
        copies[origin[q]] = n + 1
        labels[q] = g.label(origin[q]) + "'" * n
    h1 = Dfa(g.alphabet, {(s, e): t for s, e, t in spa.transitions()}, spa.initial,
             [q for q in spa.states if origin[q] in g.marked], spa.states, labels, origin,
             g.name)
    return _Prepared(h1, frozenset(spa.marked), bad)


def prepare_h1(problem: SynthesisProblem) -> Dfa:
    """Language-equal refinement of the plant in which the critical language
    is recognized by states and observer cells never partially overlap.
    ``h1.origin(q)`` is the plant state behind ``q``."""
    return _prepare(problem).h1


def critical_states(problem: SynthesisProblem) -> frozenset[int]:
    return _prepare(problem).x_m


# ------------------------------------------------------------ state filters
def _states(h: Dfa | Iterable[int]) -> set[int]:
    return set(h.states) if isinstance(h, Dfa) else set(h)


def prognosability_core_states(h1: Dfa, obs: ObserverAutomaton, x_m: Iterable[int]) -> set[int]:
    """States whose every observer cell is pure: entirely inside ``x_m`` or
    entirely outside it."""
    xm = frozenset(x_m)
    mixed = set()
    for c in obs.cells:
        if c & xm and not c <= xm:
            mixed |= c
    return set(h1.states) - mixed


def controllable_states(h_i: Dfa | Iterable[int], g_refined: Dfa,
                        uncontrollable: Iterable[str]) -> set[int]:
    """States of ``h_i`` from which no uncontrollable string of ``g_refined``
    leaves ``h_i``."""
    keep = _states(h_i)
    unc = frozenset(uncontrollable)
    pred: dict[int, list[int]] = {q: [] for q in g_refined.states}
    for s, e, t in g_refined.transitions():
        if e in unc:
            pred[t].append(s)
    bad = set(g_refined.states) - keep
    stack = list(bad)
    while stack:
        q = stack.pop()
        for p in pred[q]:
            if p not in bad:
                bad.add(p)
                stack.append(p)
    return keep - bad


def normal_states(h_i: Dfa | Iterable[int], obs: ObserverAutomaton) -> set[int]:
    """States all of whose observer cells lie inside ``h_i``."""
    keep = _states(h_i)
    drop = set()
    for c in obs.cells:
        if not c <= keep:
            drop |= c
    return keep - drop


def _prefix_closed_inside(h: Dfa, x_m: frozenset[int]) -> bool:
    outside = reachable(h) - x_m
    return not (reachable(h, outside) & x_m)


# -------------------------------------------------------------- main loop
def synthesize(problem: SynthesisProblem) -> SynthesisResult:
    prep = _prepare(problem)
    h1, x_m = prep.h1, prep.x_m
    obs = observer(h1)
    unc = problem.uncontrollable
    label = h1.label

    def removed(before: set[int], after: set[int]) -> tuple[str, ...]:
        return tuple(label(q) for q in sorted(before - after))

    maximal = True
    notes: list[str] = []
    if isinstance(problem.mode, Diagnosis) and not check_psi_projection_finite(problem.plant):
        maximal = False
        notes.append("observations of fault-ending strings are unbounded: result is sound "
                     "but may not be maximal")

    core = prognosability_core_states(h1, obs, x_m)
    trace = [TraceEntry("core", removed(set(h1.states), core), len(core))]
    current = core - prep.x_bad
    if prep.x_bad:
        trace.append(TraceEntry("prefix", removed(core, current), len(current)))
    iterations = 0

    def fail() -> SynthesisResult:
        return SynthesisResult(None, iterations, tuple(trace), h1, maximal, tuple(notes))

    while True:
        if h1.initial not in current:
            return fail()
        iterations += 1
        kept = controllable_states(current, h1, unc) & normal_states(current, obs)
        nxt = reachable(h1.restrict(kept)) if h1.initial in kept else set()
        trace.append(TraceEntry(f"iteration {iterations}", removed(current, nxt), len(nxt)))
        if not nxt:
            return fail()
        if isinstance(problem.mode, Prognosis):
            assert _prefix_closed_inside(h1.restrict(nxt), x_m)
        if nxt == current:
            break
        current = nxt
    sup = h1.restrict(current)
    return SynthesisResult(sup.with_marked(sup.states), iterations, tuple(trace), h1, maximal,
                           tuple(notes))


# ----------------------------------------------------- closed-loop checks
def satisfies_mode(problem: SynthesisProblem, sub: Dfa) -> tuple[bool, Witness | None]:
    """Mode property of the closed-loop language generated by ``sub``.

    Prognosis(k): the fault-free strings outside the plant's k-step danger
    zone are prefix-closed and pre-normal inside the closed loop.
    Diagnosis: the faulty strings with at least ``N_o`` observations (``N_o``
    taken from the plant) are pre-normal inside the closed loop.
    """
    g = problem.plant
    loop = generated(sub)
    p = problem.projection
    if isinstance(problem.mode, Diagnosis):
        n_o = observer(g).n_cells
        return is_pre_normal(LangRef(l_f_geq(g, n_o).recognizer, loop), p)
    crit = critical_nonfaulty(g, problem.mode.k).recognizer
    inside = LangRef(product(loop, crit), loop)
    return observation_inclusion(loop, prefix_closure(inside), LangRef(crit, loop), p)


def satisfies_all(problem: SynthesisProblem, sub: Dfa) -> bool:
    loop = LangRef(generated(sub), problem.plant)
    return (is_controllable(loop, problem.uncontrollable)[0]
            and is_normal(loop, problem.projection)[0]
            and satisfies_mode(problem, sub)[0])
