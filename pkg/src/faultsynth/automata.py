"""Deterministic finite automata over attributed alphabets.

An :class:`Alphabet` is an ordered collection of :class:`Event` objects, each
carrying observable / controllable / fault flags.  A :class:`Dfa` has a partial
transition function, integer state ids, and optional display labels and
provenance keys so that product states can be printed as ``(4,0)``.

Every construction here is a pure function returning a new automaton.  State
sets are always traversed in sorted order and successors in event-name order,
so every output is reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    AlphabetMismatch,
    AttributeConflict,
    InvalidAutomaton,
    ObservabilityIncompatibility,
    ProductTooLarge,
)

Word = tuple[str, ...]


@dataclass(frozen=True)
class Event:
    name: str
    observable: bool = True
    controllable: bool = True
    fault: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise InvalidAutomaton("event names must be nonempty strings")
        if self.fault and self.observable:
            raise InvalidAutomaton(f"fault event {self.name!r} must be unobservable")


class Alphabet:
    """Ordered set of events with attribute-filtered views."""

    def __init__(self, events: Iterable[Event]):
        evs = tuple(events)
        by_name: dict[str, Event] = {}
        for e in evs:
            if e.name in by_name:
                raise InvalidAutomaton(f"duplicate event name {e.name!r}")
            by_name[e.name] = e
        self._events = evs
        self._by_name = by_name
        # canonical iteration order for every algorithm
        self.names: tuple[str, ...] = tuple(sorted(by_name))

    @property
    def events(self) -> tuple[Event, ...]:
        return self._events

    def __iter__(self) -> Iterator[Event]:
        return iter(self._events)

    def __len__(self) -> int:
        return len(self._events)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Event):
            return self._by_name.get(item.name) == item
        return item in self._by_name

    def __getitem__(self, name: str) -> Event:
        return self._by_name[name]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self._by_name == other._by_name

    def __hash__(self) -> int:
        return hash(frozenset(self._events))

    def __repr__(self) -> str:
        return f"Alphabet({', '.join(self.names)})"

    def _select(self, pred: Callable[[Event], bool]) -> frozenset[str]:
        return frozenset(e.name for e in self._events if pred(e))

    @cached_property
    def observable(self) -> frozenset[str]:
        return self._select(lambda e: e.observable)

    @cached_property
    def unobservable(self) -> frozenset[str]:
        return self._select(lambda e: not e.observable)

    @cached_property
    def controllable(self) -> frozenset[str]:
        return self._select(lambda e: e.controllable)

    @cached_property
    def uncontrollable(self) -> frozenset[str]:
        return self._select(lambda e: not e.controllable)

    @cached_property
    def faults(self) -> frozenset[str]:
        return self._select(lambda e: e.fault)

    def restrict(self, names: Iterable[str]) -> "Alphabet":
        keep = set(names)
        return Alphabet(e for e in self._events if e.name in keep)

    @staticmethod
    def merge(alphabets: Sequence["Alphabet"]) -> "Alphabet":
        """Union of alphabets; shared events must carry identical flags."""
        merged: dict[str, Event] = {}
        for alpha in alphabets:
            for e in alpha:
                seen = merged.get(e.name)
                if seen is None:
                    merged[e.name] = e
                elif seen.observable != e.observable:
                    raise ObservabilityIncompatibility(
                        f"event {e.name!r} is observable in one component only"
                    )
                elif seen != e:
                    raise AttributeConflict(f"event {e.name!r} has conflicting attributes")
        return Alphabet(merged.values())


class Dfa:
    """Deterministic automaton with a partial transition function.

    ``transitions`` is a mapping ``(state, event_name) -> state`` or an
    iterable of ``(state, event_name, state)`` triples.  When ``marked`` is
    omitted every state is marked, the usual convention for plants.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        transitions: Mapping[tuple[int, str], int] | Iterable[tuple[int, str, int]],
        initial: int,
        marked: Iterable[int] | None = None,
        states: Iterable[int] | None = None,
        labels: Mapping[int, str] | None = None,
        provenance: Mapping[int, Any] | None = None,
        name: str = "",
    ):
        items = transitions.items() if isinstance(transitions, Mapping) else (
            ((s, e), t) for s, e, t in transitions
        )
        delta: dict[tuple[int, str], int] = {}
        pool: set[int] = {initial}
        for (src, ev), tgt in items:
            if ev not in alphabet:
                raise InvalidAutomaton(f"event {ev!r} not in alphabet")
            prev = delta.get((src, ev))
            if prev is not None and prev != tgt:
                raise InvalidAutomaton(f"nondeterministic transition at ({src}, {ev!r})")
            delta[(src, ev)] = tgt
            pool.add(src)
            pool.add(tgt)
        if states is not None:
            given = set(states)
            if not pool <= given:
                raise InvalidAutomaton("transition endpoint or initial state outside the state set")
            pool = given
        all_states = tuple(sorted(pool))
        mark = frozenset(all_states) if marked is None else frozenset(marked)
        if not mark <= pool:
            raise InvalidAutomaton("marked states must be states")
        out: dict[int, list[tuple[str, int]]] = {q: [] for q in all_states}
        for (src, ev), tgt in delta.items():
            out[src].append((ev, tgt))
        self.alphabet = alphabet
        self.states = all_states
        self.initial = initial
        self.marked = mark
        self.name = name
        self._delta = delta
        self._out = {q: tuple(sorted(v)) for q, v in out.items()}
        self._labels = dict(labels) if labels else {}
        self._provenance = dict(provenance) if provenance else {}

    # ------------------------------------------------------------------ access
    def delta(self, q: int, event: str) -> int | None:
        return self._delta.get((q, event))

    def out(self, q: int) -> tuple[tuple[str, int], ...]:
        """Outgoing ``(event, target)`` pairs of ``q`` in event-name order."""
        return self._out.get(q, ())

    def transitions(self) -> list[tuple[int, str, int]]:
        return sorted((s, e, t) for (s, e), t in self._delta.items())

    @property
    def n_states(self) -> int:
        return len(self.states)

    def label(self, q: int) -> str:
        return self._labels.get(q, str(q))

    def origin(self, q: int) -> Any:
        """Provenance key of ``q`` (the state itself when none was recorded)."""
        return self._provenance.get(q, q)

    @property
    def labels(self) -> dict[int, str]:
        return {q: self.label(q) for q in self.states}

    def run(self, word: Iterable[str], start: int | None = None) -> int | None:
        q: int | None = self.initial if start is None else start
        for e in word:
            if q is None:
                return None
            q = self.delta(q, e)
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        q = self.run(word)
        return q is not None and q in self.marked

    def generates(self, word: Iterable[str]) -> bool:
        return self.run(word) is not None

    # ------------------------------------------------------------ derivations
    def with_marked(self, marked: Iterable[int]) -> "Dfa":
        return Dfa(self.alphabet, self._delta, self.initial, marked, self.states,
                   self._labels, self._provenance, self.name)

    def renamed(self, name: str) -> "Dfa":
        return Dfa(self.alphabet, self._delta, self.initial, self.marked, self.states,
                   self._labels, self._provenance, name)

    def restrict(self, keep: Iterable[int]) -> "Dfa":
        """Sub-automaton induced by ``keep`` with inherited transitions (ids kept)."""
        ks = set(keep)
        if self.initial not in ks:
            raise InvalidAutomaton("restriction must keep the initial state")
        delta = {(s, e): t for (s, e), t in self._delta.items() if s in ks and t in ks}
        return Dfa(self.alphabet, delta, self.initial, self.marked & ks, ks,
                   {q: l for q, l in self._labels.items() if q in ks},
                   {q: p for q, p in self._provenance.items() if q in ks}, self.name)

    def __repr__(self) -> str:
        return (f"Dfa(name={self.name!r}, states={self.n_states}, "
                f"transitions={len(self._delta)}, marked={len(self.marked)})")


@dataclass(frozen=True)
class LangRef:
    """A language given by the marked language of ``recognizer``.

    When ``plant`` is set the language is read as a sublanguage of the plant's
    generated language.
    """

    recognizer: Dfa
    plant: Dfa | None = None

    @property
    def alphabet(self) -> Alphabet:
        return self.recognizer.alphabet

    @cached_property
    def within(self) -> Dfa:
        """Plant-refined recognizer: generated language is the plant's,
        marked states are exactly the members of this language."""
        return flag_within(self.recognizer, self.plant)

    def __contains__(self, word: Iterable[str]) -> bool:
        w = tuple(word)
        if self.plant is not None and not self.plant.generates(w):
            return False
        return self.recognizer.accepts(w)


# ---------------------------------------------------------------- builders
def explore(
    alphabet: Alphabet,
    start: Hashable,
    step: Callable[[Any], Iterable[tuple[str, Hashable]]],
    is_marked: Callable[[Any], bool],
    label: Callable[[Any], str] | None = None,
    name: str = "",
    max_states: int | None = None,
) -> tuple[Dfa, list[Any]]:
    """Breadth-first construction from an implicit transition system.

    ``step(key)`` yields ``(event, next_key)`` pairs.  States are numbered in
    discovery order with successors visited in event-name order; the list of
    keys indexed by id is returned alongside the automaton.
    """
    ids: dict[Hashable, int] = {start: 0}
    order: list[Any] = [start]
    delta: dict[tuple[int, str], int] = {}
    i = 0
    while i < len(order):
        key = order[i]
        for ev, nxt in sorted(step(key), key=lambda p: p[0]):
            j = ids.get(nxt)
            if j is None:
                j = ids[nxt] = len(order)
                order.append(nxt)
                if max_states is not None and len(order) > max_states:
                    raise ProductTooLarge(f"construction exceeds {max_states} states")
            delta[(i, ev)] = j
        i += 1
    marked = [ids[k] for k in order if is_marked(k)]
    labels = {i: label(k) for i, k in enumerate(order)} if label else None
    prov = {i: k for i, k in enumerate(order)}
    dfa = Dfa(alphabet, delta, 0, marked, range(len(order)), labels, prov, name)
    return dfa, order


def universal(alphabet: Alphabet) -> Dfa:
    """Recognizer of all strings over ``alphabet``."""
    return Dfa(alphabet, [(0, e, 0) for e in alphabet.names], 0, [0])


def empty_language(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, {}, 0, [])


def format_set(labels: Iterable[str]) -> str:
    return "{" + ",".join(labels) + "}"


# --------------------------------------------------------- structure checks
def reachable(d: Dfa, sources: Iterable[int] | None = None,
              events: frozenset[str] | None = None) -> set[int]:
    seen = set([d.initial] if sources is None else sources)
    queue = deque(sorted(seen))
    while queue:
        q = queue.popleft()
        for e, t in d.out(q):
            if (events is None or e in events) and t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def coreachable(d: Dfa, targets: Iterable[int]) -> set[int]:
    pred: dict[int, list[int]] = {}
    for s, _, t in d.transitions():
        pred.setdefault(t, []).append(s)
    seen = set(targets)
    queue = deque(sorted(seen))
    while queue:
        q = queue.popleft()
        for s in pred.get(q, ()):
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


def accessible(d: Dfa) -> Dfa:
    return d.restrict(reachable(d))


def trim(d: Dfa) -> Dfa:
    acc = reachable(d)
    keep = acc & coreachable(d, d.marked & acc)
    if d.initial not in keep:
        return Dfa(d.alphabet, {}, d.initial, [], [d.initial],
                   {d.initial: d.label(d.initial)}, {d.initial: d.origin(d.initial)}, d.name)
    return d.restrict(keep)


def is_live(d: Dfa) -> bool:
    return all(d.out(q) for q in d.states)


def has_cycle(d: Dfa, events: frozenset[str], states: Iterable[int] | None = None) -> bool:
    """True if the subgraph of ``events``-labelled edges among ``states`` has a cycle."""
    nodes = set(d.states if states is None else states)
    indeg = {q: 0 for q in nodes}
    succ: dict[int, list[int]] = {q: [] for q in nodes}
    for s, e, t in d.transitions():
        if e in events and s in nodes and t in nodes:
            succ[s].append(t)
            indeg[t] += 1
    queue = deque(q for q in sorted(nodes) if indeg[q] == 0)
    removed = 0
    while queue:
        q = queue.popleft()
        removed += 1
        for t in succ[q]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    return removed < len(nodes)


def is_convergent(d: Dfa) -> bool:
    return not has_cycle(d, d.alphabet.unobservable)


# ---------------------------------------------------------------- products
def _require_same_alphabet(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet!r} != {b.alphabet!r}")


def sync_product(ds: Sequence[Dfa], max_states: int | None = None) -> Dfa:
    """Synchronous product: shared events move jointly, private ones interleave."""
    if not ds:
        raise ValueError("sync_product needs at least one automaton")
    alphabet = Alphabet.merge([d.alphabet for d in ds])
    owners = {e: tuple(i for i, d in enumerate(ds) if e in d.alphabet) for e in alphabet.names}

    def step(key: tuple[int, ...]) -> Iterator[tuple[str, tuple[int, ...]]]:
        for e in alphabet.names:
            nxt = list(key)
            for i in owners[e]:
                t = ds[i].delta(key[i], e)
                if t is None:
                    break
                nxt[i] = t
            else:
                yield e, tuple(nxt)

    def label(key: tuple[int, ...]) -> str:
        if len(key) == 1:
            return ds[0].label(key[0])
        return "(" + ",".join(ds[i].label(q) for i, q in enumerate(key)) + ")"

    start = tuple(d.initial for d in ds)
    out, _ = explore(alphabet, start, step,
                     lambda k: all(q in ds[i].marked for i, q in enumerate(k)), label,
                     "||".join(d.name for d in ds if d.name), max_states)
    return out


def product(a: Dfa, b: Dfa) -> Dfa:
    """Intersection of both generated and marked languages over one alphabet."""
    _require_same_alphabet(a, b)
    return sync_product([a, b])


def flag_within(recognizer: Dfa, plant: Dfa | None) -> Dfa:
    """Product of ``plant`` with the completed ``recognizer``.

    The result generates exactly the plant language; a state is marked iff
    the strings reaching it belong to the recognizer's marked language.
    Provenance keys are ``(plant_state, recognizer_state_or_None)``.
    """
    if plant is None:
        plant = universal(recognizer.alphabet)
    _require_same_alphabet(recognizer, plant)

    def step(key: tuple[int, int | None]) -> Iterator[tuple[str, tuple[int, int | None]]]:
        p, r = key
        for e, p2 in plant.out(p):
            yield e, (p2, None if r is None else recognizer.delta(r, e))

    out, _ = explore(plant.alphabet, (plant.initial, recognizer.initial), step,
                     lambda k: k[1] is not None and k[1] in recognizer.marked,
                     lambda k: plant.label(k[0]), plant.name)
    return out


def complement_within(m: LangRef) -> LangRef:
    """Strings of the plant language that are not in ``m``."""
    f = m.within
    return LangRef(f.with_marked(set(f.states) - f.marked), m.plant)


def language_union(a: LangRef, b: LangRef) -> LangRef:
    _require_same_alphabet(a.recognizer, b.recognizer)
    plant = a.plant if a.plant is not None else b.plant
    ra, rb = a.recognizer, b.recognizer
    base = plant if plant is not None else universal(ra.alphabet)

    def step(key):
        p, x, y = key
        for e, p2 in base.out(p):
            yield e, (p2, None if x is None else ra.delta(x, e),
                      None if y is None else rb.delta(y, e))

    def marked(key) -> bool:
        _, x, y = key
        return (x is not None and x in ra.marked) or (y is not None and y in rb.marked)

    out, _ = explore(base.alphabet, (base.initial, ra.initial, rb.initial), step, marked,
                     lambda k: base.label(k[0]), base.name)
    return LangRef(out, plant)


def language_intersection(a: LangRef, b: LangRef) -> LangRef:
    return LangRef(product(a.recognizer, b.recognizer), a.plant if a.plant is not None else b.plant)


def language_difference(a: LangRef, b: LangRef) -> LangRef:
    """Marked strings of ``a`` not in ``b``."""
    _require_same_alphabet(a.recognizer, b.recognizer)
    ra, rb = a.recognizer, b.recognizer

    def step(key):
        x, y = key
        for e, x2 in ra.out(x):
            yield e, (x2, None if y is None else rb.delta(y, e))

    out, _ = explore(ra.alphabet, (ra.initial, rb.initial), step,
                     lambda k: k[0] in ra.marked and (k[1] is None or k[1] not in rb.marked),
                     lambda k: ra.label(k[0]), ra.name)
    return LangRef(out, a.plant if a.plant is not None else b.plant)


def distinguishing_word(a: Dfa, b: Dfa, mode: str = "equal") -> Word | None:
    """Shortest word witnessing inequality (``mode='equal'``) or non-inclusion
    of ``L_m(a)`` in ``L_m(b)`` (``mode='subset'``); ``None`` if there is none."""
    _require_same_alphabet(a, b)
    names = a.alphabet.names

    def bad(x: int | None, y: int | None) -> bool:
        ma = x is not None and x in a.marked
        mb = y is not None and y in b.marked
        return (ma and not mb) if mode == "subset" else ma != mb

    start = (a.initial, b.initial)
    parent: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        x, y = node = queue.popleft()
        if bad(x, y):
            word: list[str] = []
            cur = node
            while parent[cur] is not None:
                prev, e = parent[cur]
                word.append(e)
                cur = prev
            return tuple(reversed(word))
        for e in names:
            x2 = None if x is None else a.delta(x, e)
            y2 = None if y is None else b.delta(y, e)
            if x2 is None and (y2 is None or mode == "subset"):
                continue
            nxt = (x2, y2)
            if nxt not in parent:
                parent[nxt] = (node, e)
                queue.append(nxt)
    return None


def is_language_equal(a: Dfa, b: Dfa) -> bool:
    """Marked-language equality."""
    return distinguishing_word(a, b, "equal") is None


def is_sublanguage(a: Dfa, b: Dfa) -> bool:
    return distinguishing_word(a, b, "subset") is None


def is_empty(d: Dfa) -> bool:
    return not (reachable(d) & d.marked)


def generated(d: Dfa) -> Dfa:
    """Recognizer of the generated language (every state marked)."""
    return d.with_marked(d.states)


# ------------------------------------------------------ observation cells
def closure(d: Dfa, states: Iterable[int], events: frozenset[str]) -> frozenset[int]:
    return frozenset(reachable(d, states, events))


def subset_construction(
    d: Dfa, keep: frozenset[str], start: Iterable[int], mark: str = "any"
) -> tuple[Dfa, list[frozenset[int]]]:
    """Determinize ``d`` with all events outside ``keep`` read as silent.

    Returns the automaton over the ``keep`` sub-alphabet and the list of cells
    (sets of ``d``-states) indexed by state id.  ``mark`` is ``"any"`` (a cell
    is marked if one member is) or ``"all"`` (every cell marked).
    """
    silent = frozenset(d.alphabet.names) - keep
    alphabet = d.alphabet.restrict(keep)
    names = alphabet.names
    init = closure(d, start, silent)

    def step(cell: frozenset[int]) -> Iterator[tuple[str, frozenset[int]]]:
        for e in names:
            nxt = {t for q in cell if (t := d.delta(q, e)) is not None}
            if nxt:
                yield e, closure(d, nxt, silent)

    def label(cell: frozenset[int]) -> str:
        return format_set(d.label(q) for q in sorted(cell))

    marker = (lambda c: True) if mark == "all" else (lambda c: bool(c & d.marked))
    out, cells = explore(alphabet, init, step, marker, label, d.name)
    return out, cells


def spa_refine(g: Dfa) -> Dfa:
    """Product of ``g`` with its observer: a language-equal state-partition
    automaton.  Provenance keys are ``(g_state, cell)``."""
    unobs = g.alphabet.unobservable
    obs_dfa, cells = subset_construction(g, g.alphabet.observable, [g.initial], "all")
    index = {c: i for i, c in enumerate(cells)}

    def step(key: tuple[int, int]) -> Iterator[tuple[str, tuple[int, int]]]:
        x, c = key
        for e, x2 in g.out(x):
            c2 = c if e in unobs else obs_dfa.delta(c, e)
            yield e, (x2, c2)

    init_cell = index[cells[0]]
    refined, keys = explore(g.alphabet, (g.initial, init_cell), step,
                            lambda k: k[0] in g.marked, None, g.name)
    labels = {}
    copies: dict[int, int] = {}
    for i, (x, _) in enumerate(keys):
        n = copies.get(x, 0)
        copies[x] = n + 1
        labels[i] = g.label(x) + "'" * n
    prov = {i: (x, cells[c]) for i, (x, c) in enumerate(keys)}
    return Dfa(refined.alphabet, dict(((s, e), t) for s, e, t in refined.transitions()),
               refined.initial, refined.marked, refined.states, labels, prov, g.name)


def observer_cells(d: Dfa) -> list[frozenset[int]]:
    return subset_construction(d, d.alphabet.observable, [d.initial], "all")[1]


def is_spa(d: Dfa) -> bool:
    """Observer cells of ``d`` are pairwise equal or disjoint."""
    cells = observer_cells(d)
    for i, a in enumerate(cells):
        for b in cells[i + 1:]:
            if a & b and a != b:
                return False
    return True


def is_strict_subautomaton(h: Dfa, g: Dfa) -> bool:
    """``h`` keeps a subset of ``g``'s states and exactly the transitions of
    ``g`` among them."""
    hs = set(h.states)
    if not hs <= set(g.states) or h.initial != g.initial:
        return False
    for s, e, t in h.transitions():
        if g.delta(s, e) != t:
            return False
    for s, e, t in g.transitions():
        if s in hs and t in hs and h.delta(s, e) != t:
            return False
    return True


def minimize(d: Dfa) -> Dfa:
    """Minimal recognizer of ``L_m(d)`` (partial: no dead sink), states
    numbered in breadth-first order."""
    t = trim(d)
    if not t.marked:
        return empty_language(d.alphabet)
    names = t.alphabet.names
    block = {q: int(q in t.marked) for q in t.states}
    n_blocks = len(set(block.values()))
    while True:
        sig = {q: (block[q], tuple(block.get(t.delta(q, e), -1) if t.delta(q, e) is not None
                                   else -1 for e in names)) for q in t.states}
        ids: dict[tuple, int] = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in sorted(t.states)}
        block = new
        if len(ids) == n_blocks:
            break
        n_blocks = len(ids)

    def step(b: int) -> Iterator[tuple[str, int]]:
        rep = next(q for q in t.states if block[q] == b)
        for e, q2 in t.out(rep):
            yield e, block[q2]

    marked_blocks = {block[q] for q in t.marked}
    out, _ = explore(t.alphabet, block[t.initial], step, lambda b: b in marked_blocks,
                     None, d.name)
    return Dfa(out.alphabet, {(s, e): x for s, e, x in out.transitions()}, 0, out.marked,
               out.states, None, None, d.name)
