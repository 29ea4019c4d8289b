"""Observer and verifier constructions and the verdict procedures.

k-prognosability is decided by the observation-closure inclusion

    P^-1 P(closure(K)) ∩ L ⊆ K,   K = L_n minus the k-step danger zone,

and diagnosability by pre-normality of the faulty strings carrying at least
``N_o`` observations, ``N_o`` being the observer size.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterator

from .automata import (
    Dfa,
    LangRef,
    accessible,
    format_set,
    has_cycle,
    is_convergent,
    is_language_equal,
    is_live,
    language_difference,
    subset_construction,
    trim,
)
from .errors import AssumptionViolated, EmptyFaultLanguage, NotPrognosable
from .faults import l_f_geq, min_fault_observations, non_faulty_language, psi, psi_minus_k
from .languages import Projection, Witness, is_pre_normal, observation_inclusion, prefix_closure, project


class InfiniteFaultProjectionWarning(UserWarning):
    """Diagnosability verdict is only a sufficient condition for this plant."""


UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class VerdictReport:
    verdict: bool
    property: str
    parameters: dict[str, Any] = field(default_factory=dict)
    witness: Witness | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ObserverAutomaton:
    dfa: Dfa
    cells: tuple[frozenset[int], ...]
    plant: Dfa

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def cell_labels(self) -> list[str]:
        return [format_set(self.plant.label(q) for q in sorted(c)) for c in self.cells]

    def cells_containing(self, q: int) -> list[frozenset[int]]:
        return [c for c in self.cells if q in c]


Move = tuple[str | None, str | None]


@dataclass(frozen=True)
class VerifierAutomaton:
    """Observation-synchronised self-product whose left track never faults."""

    plant: Dfa
    pairs: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, Move, int], ...]

    @property
    def initial(self) -> int:
        return 0

    def label(self, i: int) -> str:
        x, y = self.pairs[i]
        return f"({self.plant.label(x)},{self.plant.label(y)})"

    def index(self, pair: tuple[int, int]) -> int:
        return self.pairs.index(pair)


def require_live_convergent(g: Dfa, force: bool = False) -> None:
    if force:
        return
    acc = accessible(g)
    if not is_live(acc):
        raise AssumptionViolated(f"plant {g.name or ''} is not live".replace("  ", " "))
    if not is_convergent(acc):
        raise AssumptionViolated(f"plant {g.name or ''} has a cycle of unobservable events".replace("  ", " "))


def observer(g: Dfa) -> ObserverAutomaton:
    dfa, cells = subset_construction(g, g.alphabet.observable, [g.initial], "all")
    return ObserverAutomaton(dfa, tuple(cells), g)


def verifier_moves(g: Dfa, x: int, y: int) -> Iterator[tuple[Move, int, int]]:
    obs, faults = g.alphabet.observable, g.alphabet.faults
    for e in g.alphabet.names:
        if e in obs:
            x2, y2 = g.delta(x, e), g.delta(y, e)
            if x2 is not None and y2 is not None:
                yield (e, e), x2, y2
        else:
            if e not in faults and (x2 := g.delta(x, e)) is not None:
                yield (e, None), x2, y
            if (y2 := g.delta(y, e)) is not None:
                yield (None, e), x, y2


def build_verifier(g: Dfa) -> VerifierAutomaton:
    start = (g.initial, g.initial)
    ids = {start: 0}
    pairs = [start]
    edges = []
    i = 0
    while i < len(pairs):
        x, y = pairs[i]
        for move, x2, y2 in verifier_moves(g, x, y):
            j = ids.get((x2, y2))
            if j is None:
                j = ids[(x2, y2)] = len(pairs)
                pairs.append((x2, y2))
            edges.append((i, move, j))
        i += 1
    return VerifierAutomaton(g, tuple(pairs), tuple(edges))


def uncertain_states(v: VerifierAutomaton, g: Dfa, n: int) -> frozenset[tuple[int, int]]:
    """Verifier pairs reached by a fault-free left string and a faulty right
    string with at least ``n`` observations."""
    obs, faults = g.alphabet.observable, g.alphabet.faults
    start = (g.initial, g.initial, False, 0)
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        x, y, faulted, count = queue.popleft()
        if faulted and count >= n:
            found.add((x, y))
        for (a, b), x2, y2 in verifier_moves(g, x, y):
            f2 = faulted or (b in faults)
            c2 = min(n, count + (a in obs if a else 0))
            nxt = (x2, y2, f2, c2)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(found & set(v.pairs))


def critical_nonfaulty(g: Dfa, k: int) -> LangRef:
    """Fault-free strings outside the k-step danger zone."""
    return language_difference(non_faulty_language(g), psi_minus_k(g, k))


def check_k_prognosable(g: Dfa, k: int, force: bool = False) -> VerdictReport:
    require_live_convergent(g, force)
    p = Projection.observable(g.alphabet)
    critical = critical_nonfaulty(g, k)
    ok, w = observation_inclusion(g, prefix_closure(critical), critical, p)
    return VerdictReport(ok, "k-prognosability", {"k": k}, w)


def check_prognosable(g: Dfa, force: bool = False) -> VerdictReport:
    r = check_k_prognosable(g, 0, force)
    return VerdictReport(r.verdict, "prognosability", r.parameters, r.witness, r.notes)


def check_psi_projection_finite(g: Dfa) -> bool:
    d = trim(project(psi(g).recognizer, Projection.observable(g.alphabet)))
    if not d.marked:
        return True
    return not has_cycle(d, frozenset(d.alphabet.names))


def diagnosable_at(g: Dfa, n: int) -> tuple[bool, Witness | None]:
    return is_pre_normal(l_f_geq(g, n), Projection.observable(g.alphabet))


def check_diagnosable(g: Dfa, force: bool = False) -> VerdictReport:
    require_live_convergent(g, force)
    n_o = observer(g).n_cells
    minimal = None
    # monotone in n: settle the verdict at N_o before scanning for the least n
    ok, witness = diagnosable_at(g, n_o)
    if ok:
        minimal = next(n for n in range(n_o + 1) if diagnosable_at(g, n)[0])
    notes: tuple[str, ...] = ()
    if not check_psi_projection_finite(g):
        msg = "observations of fault-ending strings are unbounded: verdict is sufficient only"
        warnings.warn(msg, InfiniteFaultProjectionWarning, stacklevel=2)
        notes = (msg,)
    params = {"N_o": n_o, "N": minimal}
    return VerdictReport(minimal is not None, "diagnosability", params, witness, notes)


def check_pro_eq_dia(g: Dfa, force: bool = False) -> VerdictReport:
    require_live_convergent(g, force)
    n_s = min_fault_observations(g)
    if n_s is None:
        raise EmptyFaultLanguage("plant has no fault-ending strings")
    ok, w = diagnosable_at(g, n_s + 1)
    return VerdictReport(ok, "prognosis-diagnosis equivalence", {"N_s": n_s}, w)


def max_prognosis_horizon(g: Dfa, force: bool = False) -> int | str:
    """Largest k for which ``g`` is k-prognosable.

    The scan stops at the fewest observations on a fault-ending string: no
    prefix of that string lies further ahead, so a larger horizon could only
    hold vacuously for it.  Plants without faults are ``UNBOUNDED``.
    """
    require_live_convergent(g, force)
    n_s = min_fault_observations(g)
    if n_s is None:
        return UNBOUNDED
    if not check_k_prognosable(g, 0, True).verdict:
        raise NotPrognosable("plant is not 0-prognosable")
    for k in range(1, n_s + 1):
        if not check_k_prognosable(g, k, True).verdict:
            return k - 1
    return n_s


def danger_zone_stable(g: Dfa, k: int) -> bool:
    return is_language_equal(psi_minus_k(g, k).recognizer, psi_minus_k(g, k + 1).recognizer)


def verifier_as_dfa(v: VerifierAutomaton) -> Dfa:
    """The verifier as an ordinary automaton whose events are named by the
    move pairs, e.g. ``(a,a)`` or ``(tau,ε)``."""
    from .automata import Alphabet, Event

    g = v.plant
    obs = g.alphabet.observable
    names: dict[Move, str] = {}
    events = []
    for _, move, _ in v.edges:
        if move in names:
            continue
        a, b = move
        names[move] = f"({a or 'ε'},{b or 'ε'})"
        seen = a if a is not None else b
        observable = seen in obs
        fault = not observable and b is not None and b in g.alphabet.faults
        events.append(Event(names[move], observable, True, fault))
    alphabet = Alphabet(events)
    delta = {(i, names[m]): j for i, m, j in v.edges}
    labels = {i: v.label(i) for i in range(len(v.pairs))}
    return Dfa(alphabet, delta, 0, None, range(len(v.pairs)), labels, dict(enumerate(v.pairs)),
               f"{g.name}|||{g.name}" if g.name else "verifier")
