"""Brute-force checkers that follow the definitions directly, used to
validate the fast constructions.

Nothing here shares code with the verdict procedures beyond the automaton
data structure, the fault-phase refinement and the observer.  Unbounded
quantifiers ("arbitrarily long extensions") are decided by cycle
reachability, never by enumeration depth.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .automata import Alphabet, Dfa, Event, LangRef, Word, accessible, empty_language, language_union
from .errors import BudgetExceeded
from .faults import Phase, fault_refine
from .verification import require_live_convergent, verifier_moves


@dataclass(frozen=True)
class EnumBound:
    max_len: int
    justification: str = ""

    def __post_init__(self) -> None:
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")


def enumerate_language(d: Dfa, bound: EnumBound | int) -> list[Word]:
    """Marked strings of length at most ``bound``, shortest first, then
    lexicographic."""
    n = bound.max_len if isinstance(bound, EnumBound) else bound
    out: list[Word] = []
    layer = [((), d.initial)]
    for depth in range(n + 1):
        nxt = []
        for w, q in layer:
            if q in d.marked:
                out.append(w)
            if depth < n:
                nxt.extend((w + (e,), t) for e, t in d.out(q))
        layer = nxt
    return sorted(out, key=lambda w: (len(w), w))


def _nodes_on_cycles(succ: dict[int, list[int]]) -> set[int]:
    """Nodes that lie on a cycle (Tarjan, iterative)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[int] = []
    on_stack: set[int] = set()
    result: set[int] = set()
    counter = 0
    for root in sorted(succ):
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                if len(comp) > 1 or v in succ[v]:
                    result.update(comp)
    return result


def _can_reach(succ: dict[int, list[int]], targets: set[int]) -> set[int]:
    pred: dict[int, list[int]] = {v: [] for v in succ}
    for v, ws in succ.items():
        for w in ws:
            pred[w].append(v)
    seen = set(targets)
    queue = deque(targets)
    while queue:
        v = queue.popleft()
        for u in pred[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def oracle_k_prognosable(g: Dfa, k: int, force: bool = False) -> bool:
    return k_prognosis_counterexample(g, k, force) is None


def k_prognosis_counterexample(g: Dfa, k: int, force: bool = False) -> tuple[Word, Word] | None:
    """Search for ``s`` (with a continuation ``s'`` of exactly ``k``
    observations ending in a fault) and a fault-free ``t`` with the same
    observation from which fault-free behaviour can go on forever."""
    require_live_convergent(g, force)
    fr = fault_refine(g)
    r = fr.refined
    obs, faults = g.alphabet.observable, g.alphabet.faults
    healthy = fr.states_in(Phase.NO_FAULT)
    just = fr.states_in(Phase.JUST_FAULTED)

    nf_succ = {q: [t for e, t in r.out(q) if e not in faults] for q in healthy}
    endless = _can_reach(nf_succ, _nodes_on_cycles(nf_succ))

    unobs_pred: dict[int, list[int]] = {q: [] for q in r.states}
    obs_pred: dict[int, list[int]] = {q: [] for q in r.states}
    for s, e, t in r.transitions():
        (obs_pred if e in obs else unobs_pred)[t].append(s)

    def silent_back(seed: set[int]) -> set[int]:
        seen = set(seed)
        queue = deque(seed)
        while queue:
            v = queue.popleft()
            for u in unobs_pred[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen

    ahead = silent_back(set(just))
    for _ in range(k):
        ahead = silent_back({u for v in ahead for u in obs_pred[v]})
    if not ahead or not endless:
        return None

    start = (r.initial, r.initial)
    parent: dict[tuple[int, int], tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        x, y = node
        if x in ahead and y in endless:
            s, t = [], []
            cur = node
            while parent[cur] is not None:
                prev, a, b = parent[cur]
                if a:
                    s.append(a)
                if b:
                    t.append(b)
                cur = prev
            return tuple(reversed(s)), tuple(reversed(t))
        for e in g.alphabet.names:
            if e in obs:
                x2, y2 = r.delta(x, e), r.delta(y, e)
                moves = [((x2, y2), e, e)] if x2 is not None and y2 is not None else []
            else:
                moves = []
                if (x2 := r.delta(x, e)) is not None:
                    moves.append(((x2, y), e, None))
                if e not in faults and (y2 := r.delta(y, e)) is not None:
                    moves.append(((x, y2), None, e))
            for nxt, a, b in moves:
                if nxt not in parent:
                    parent[nxt] = (node, a, b)
                    queue.append(nxt)
    return None


def oracle_diagnosable(g: Dfa, force: bool = False) -> bool:
    """Not diagnosable iff the verifier of the fault-refined plant has a
    reachable cycle whose right track has already faulted."""
    require_live_convergent(g, force)
    fr = fault_refine(g)
    r = fr.refined
    phase = fr.phases
    start = (r.initial, r.initial)
    seen = {start}
    queue = deque([start])
    succ: dict[tuple[int, int], list[tuple[int, int]]] = {}
    while queue:
        x, y = node = queue.popleft()
        succ[node] = []
        for _, x2, y2 in verifier_moves(r, x, y):
            nxt = (x2, y2)
            succ[node].append(nxt)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    faulty = {v for v in succ if phase[v[1]] != Phase.NO_FAULT}
    ids = {v: i for i, v in enumerate(sorted(faulty))}
    sub = {ids[v]: [ids[w] for w in succ[v] if w in faulty] for v in faulty}
    return not _nodes_on_cycles(sub)


def accessible_subsets(h: Dfa) -> list[frozenset[int]]:
    """Every state set containing the initial state in which each state is
    reachable through the set.  A strict sub-automaton has the language of
    its accessible part, so these sets cover every candidate language."""
    pred: dict[int, set[int]] = {q: set() for q in h.states}
    for s, _, t in h.transitions():
        pred[t].add(s)
    start = frozenset([h.initial])
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for q in h.states:
            if q not in cur and pred[q] & cur:
                nxt = cur | {q}
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return sorted(seen, key=lambda x: (len(x), sorted(x)))


def oracle_supremal(problem, budget: int = 6) -> LangRef:
    """Union of all strict sub-automata of the refined plant whose languages
    are controllable, normal and satisfy the mode property."""
    from .synthesis import prepare_h1, satisfies_all

    h1 = prepare_h1(problem)
    if h1.n_states > budget:
        raise BudgetExceeded(f"refined plant has {h1.n_states} states, budget is {budget}")
    plant = problem.plant
    union = LangRef(empty_language(plant.alphabet), plant)
    for keep in accessible_subsets(h1):
        sub = h1.restrict(keep)
        if satisfies_all(problem, sub):
            union = language_union(union, LangRef(sub, plant))
    return union


# ------------------------------------------------------------ random plants
def random_plant(
    seed: int,
    max_states: int = 8,
    max_events: int = 5,
    max_faults: int = 2,
    density: float = 0.35,
    min_states: int = 2,
) -> Dfa:
    """Seeded random plant that is live and convergent by construction.

    Dead states get an observable self-loop; every cycle of unobservable
    events loses one edge until none is left.
    """
    rng = random.Random(seed)
    n = rng.randint(min_states, max_states)
    n_faults = rng.randint(0, min(max_faults, max_events - 2))
    n_plain = rng.randint(2, max_events - n_faults)
    events = []
    for i in range(n_plain):
        observable = i == 0 or rng.random() < 0.6
        controllable = observable and rng.random() < 0.8 or (not observable and rng.random() < 0.3)
        events.append(Event("abcdeg"[i] if observable else "uvwxyz"[i], observable, controllable))
    for j in range(n_faults):
        events.append(Event(f"f{j + 1}", False, False, True))
    alphabet = Alphabet(events)
    obs_names = sorted(alphabet.observable)
    delta: dict[tuple[int, str], int] = {}
    for q in range(n):
        for e in alphabet.names:
            if rng.random() < density:
                delta[(q, e)] = rng.randrange(n)
    unobs = alphabet.unobservable
    while True:
        changed = False
        for q in range(n):
            if not any((q, e) in delta for e in alphabet.names):
                delta[(q, rng.choice(obs_names))] = q
                changed = True
        cycle = _find_unobs_cycle(delta, unobs, n)
        if cycle is not None:
            del delta[rng.choice(cycle)]
            changed = True
        if not changed:
            break
    return accessible(Dfa(alphabet, delta, 0, None, range(n), name=f"rand{seed}"))


def _find_unobs_cycle(delta, unobs, n) -> list[tuple[int, str]] | None:
    succ: dict[int, list[tuple[str, int]]] = {q: [] for q in range(n)}
    for (q, e), t in sorted(delta.items()):
        if e in unobs:
            succ[q].append((e, t))
    color = [0] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, 0)]
        path: list[tuple[int, str]] = []
        color[root] = 1
        while stack:
            v, i = stack[-1]
            if i < len(succ[v]):
                stack[-1] = (v, i + 1)
                e, w = succ[v][i]
                if color[w] == 1:
                    idx = next((j for j, (s, _) in enumerate(path) if s == w), len(path))
                    return path[idx:] + [(v, e)]
                if color[w] == 0:
                    color[w] = 1
                    path.append((v, e))
                    stack.append((w, 0))
            else:
                color[v] = 2
                stack.pop()
                if path:
                    path.pop()
    return None


def rename_events(d: Dfa, mapping: dict[str, str]) -> Dfa:
    alphabet = Alphabet(Event(mapping.get(e.name, e.name), e.observable, e.controllable, e.fault)
                        for e in d.alphabet)
    delta = {(s, mapping.get(e, e)): t for s, e, t in d.transitions()}
    return Dfa(alphabet, delta, d.initial, d.marked, d.states, d.labels, None, d.name)


def random_modular_pair(seed: int, max_states: int = 6, shared: bool = False) -> tuple[Dfa, Dfa]:
    """Two random components with disjoint alphabets, or sharing exactly one
    observable controllable event when ``shared`` is set."""
    rng = random.Random(seed)
    parts = []
    for tag in ("1", "2"):
        g = random_plant(rng.randrange(1 << 30), max_states=max_states, max_events=4)
        parts.append(rename_events(g, {e: e + tag for e in g.alphabet.names}))
    if shared:
        first = sorted(parts[0].alphabet.observable & parts[0].alphabet.controllable)
        second = sorted(parts[1].alphabet.observable & parts[1].alphabet.controllable)
        if first and second:
            parts[1] = rename_events(parts[1], {second[0]: first[0]})
    return parts[0], parts[1]
