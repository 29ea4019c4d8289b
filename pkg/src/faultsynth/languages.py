"""Regular-language operations on recognizers.

Languages are represented by the marked language of a :class:`Dfa`, usually
wrapped in a :class:`LangRef` that remembers the plant they live in.  The
checks (pre-normality, normality, controllability, extension-closedness) all
work on the plant-refined recognizer, where membership is a property of the
state reached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .automata import (
    Alphabet,
    Dfa,
    LangRef,
    Word,
    empty_language,
    explore,
    reachable,
    subset_construction,
    trim,
    universal,
    _require_same_alphabet,
)


@dataclass(frozen=True)
class Projection:
    """Natural projection erasing every event outside ``target``."""

    source: Alphabet
    target: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", frozenset(self.target))
        if not self.target <= frozenset(self.source.names):
            raise ValueError("projection target must be a subset of the source alphabet")

    @classmethod
    def observable(cls, alphabet: Alphabet) -> "Projection":
        return cls(alphabet, alphabet.observable)

    def __call__(self, word: Iterable[str]) -> Word:
        return tuple(e for e in word if e in self.target)


@dataclass(frozen=True)
class Witness:
    """Counterexample pair.  For pre-normality ``P(s) == P(t)``; for
    controllability ``t`` is the single uncontrollable event leaving."""

    s: Word
    t: Word
    note: str = ""


def format_word(word: Iterable[str]) -> str:
    w = tuple(word)
    if not w:
        return "ε"
    if all(len(e) == 1 for e in w):
        return "".join(w)
    return " ".join(w)


def project(d: Dfa, p: Projection) -> Dfa:
    return subset_construction(d, p.target & frozenset(d.alphabet.names), [d.initial], "any")[0]


def inverse_project(d: Dfa, full: Alphabet) -> Dfa:
    """Add self-loops on every event of ``full`` that ``d`` does not know."""
    own = set(d.alphabet.names)
    if not own <= set(full.names):
        raise ValueError("inverse projection target must contain the source alphabet")
    extra = [e for e in full.names if e not in own]
    delta = {(s, e): t for s, e, t in d.transitions()}
    for q in d.states:
        for e in extra:
            delta[(q, e)] = q
    return Dfa(full, delta, d.initial, d.marked, d.states, d.labels, None, d.name)


def prefix_closure(m: LangRef) -> LangRef:
    t = trim(m.recognizer)
    if not t.marked:
        return LangRef(t, m.plant)
    return LangRef(t.with_marked(t.states), m.plant)


def supremal_prefix_closed_subset(m: LangRef) -> LangRef:
    f = m.within
    if f.initial not in f.marked:
        return LangRef(empty_language(f.alphabet), m.plant)
    keep = reachable(f.restrict(f.marked))
    return LangRef(f.restrict(keep), m.plant)


def right_quotient(l: Dfa, divisor: Dfa) -> Dfa:
    """Re-mark ``l``: state q is marked iff some word of ``L_m(divisor)`` leads
    from q to a marked state."""
    _require_same_alphabet(l, divisor)
    names = l.alphabet.names
    starts = [(q, divisor.initial) for q in l.states]
    seen = set(starts)
    queue = deque(starts)
    pred: dict[tuple[int, int], list[tuple[int, int]]] = {}
    while queue:
        x, y = node = queue.popleft()
        for e in names:
            x2, y2 = l.delta(x, e), divisor.delta(y, e)
            if x2 is None or y2 is None:
                continue
            nxt = (x2, y2)
            pred.setdefault(nxt, []).append(node)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    good = {n for n in seen if n[0] in l.marked and n[1] in divisor.marked}
    queue = deque(sorted(good))
    while queue:
        node = queue.popleft()
        for prev in pred.get(node, ()):
            if prev not in good:
                good.add(prev)
                queue.append(prev)
    return l.with_marked(q for q in l.states if (q, divisor.initial) in good)


def left_quotient(divisor: Dfa, l: Dfa) -> Dfa:
    """Union of the automata rooted at the states ``L_m(divisor)`` leads to."""
    _require_same_alphabet(l, divisor)
    names = l.alphabet.names
    start = (divisor.initial, l.initial)
    seen = {start}
    queue = deque([start])
    roots: set[int] = set()
    while queue:
        y, x = queue.popleft()
        if y in divisor.marked:
            roots.add(x)
        for e in names:
            y2, x2 = divisor.delta(y, e), l.delta(x, e)
            if y2 is not None and x2 is not None and (y2, x2) not in seen:
                seen.add((y2, x2))
                queue.append((y2, x2))
    if not roots:
        return empty_language(l.alphabet)
    return subset_construction(l, frozenset(names), sorted(roots), "any")[0]


def concat_sigma_star_within(m: LangRef) -> LangRef:
    """Strings of the plant with some prefix in ``m``."""
    f = m.within

    def step(key):
        q, seen = key
        for e, t in f.out(q):
            yield e, (t, seen or t in f.marked)

    out, _ = explore(f.alphabet, (f.initial, f.initial in f.marked), step, lambda k: k[1],
                     lambda k: f.label(k[0]), f.name)
    return LangRef(out, m.plant)


def sigma_o_bounded(alphabet: Alphabet, n: int, mode: str) -> Dfa:
    """Recognizer of strings with at most (``mode='<='``) or at least
    (``mode='>='``) ``n`` observable events."""
    if n < 0:
        raise ValueError("n must be non-negative")
    obs = alphabet.observable
    delta = {}
    for i in range(n + 1):
        for e in alphabet.names:
            if e not in obs:
                delta[(i, e)] = i
            elif mode in ("<=", "le"):
                if i < n:
                    delta[(i, e)] = i + 1
            elif mode in (">=", "ge"):
                delta[(i, e)] = min(i + 1, n)
            else:
                raise ValueError(f"unknown mode {mode!r}")
    marked = range(n + 1) if mode in ("<=", "le") else [n]
    return Dfa(alphabet, delta, 0, marked, range(n + 1))


# ------------------------------------------------------------------ checks
def pair_search(
    f: Dfa,
    observable: frozenset[str],
    left_ok: Callable[[int], bool],
    right_ok: Callable[[int], bool],
    note: str = "",
) -> Witness | None:
    """Shortest pair ``(s, t)`` of ``f``-strings with equal projections such
    that ``left_ok(state(s))`` and ``right_ok(state(t))``.

    Breadth-first over the observation-synchronised self-product; moves are
    tried in event-name order, an unobservable left move before the matching
    right move.
    """
    names = f.alphabet.names
    start = (f.initial, f.initial)
    parent: dict[tuple[int, int], tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        x, y = node
        if left_ok(x) and right_ok(y):
            s: list[str] = []
            t: list[str] = []
            cur = node
            while parent[cur] is not None:
                prev, a, b = parent[cur]
                if a:
                    s.append(a)
                if b:
                    t.append(b)
                cur = prev
            return Witness(tuple(reversed(s)), tuple(reversed(t)), note)
        for e in names:
            if e in observable:
                x2, y2 = f.delta(x, e), f.delta(y, e)
                if x2 is not None and y2 is not None:
                    moves = [((x2, y2), e, e)]
                else:
                    moves = []
            else:
                moves = []
                if (x2 := f.delta(x, e)) is not None:
                    moves.append(((x2, y), e, None))
                if (y2 := f.delta(y, e)) is not None:
                    moves.append(((x, y2), None, e))
            for nxt, a, b in moves:
                if nxt not in parent:
                    parent[nxt] = (node, a, b)
                    queue.append(nxt)
    return None


def is_pre_normal(m: LangRef, p: Projection) -> tuple[bool, Witness | None]:
    """``M == P^-1 P(M) ∩ L``; on failure ``s ∈ M`` and ``t ∈ L \\ M``."""
    f = m.within
    w = pair_search(f, p.target, lambda x: x in f.marked, lambda y: y not in f.marked,
                    "s in the language, t outside it, same observation")
    return w is None, w


def is_pre_normal_by_cells(m: LangRef, p: Projection) -> bool:
    """Second implementation: no observation cell of the refined recognizer
    mixes member and non-member states."""
    f = m.within
    _, cells = subset_construction(f, p.target, [f.initial], "all")
    return all(c <= f.marked or not (c & f.marked) for c in cells)


def is_normal(m: LangRef, p: Projection) -> tuple[bool, Witness | None]:
    return is_pre_normal(prefix_closure(m), p)


def observation_inclusion(
    plant: Dfa, a: LangRef, b: LangRef, p: Projection
) -> tuple[bool, Witness | None]:
    """Decide ``P^-1 P(A) ∩ L ⊆ B``; the witness has ``s ∈ A``, ``t ∈ L \\ B``."""
    ra, rb = a.recognizer, b.recognizer
    _require_same_alphabet(ra, plant)
    _require_same_alphabet(rb, plant)

    def step(key):
        q, x, y = key
        for e, q2 in plant.out(q):
            yield e, (q2, None if x is None else ra.delta(x, e),
                      None if y is None else rb.delta(y, e))

    f, keys = explore(plant.alphabet, (plant.initial, ra.initial, rb.initial), step,
                      lambda k: False)
    in_a = [k[1] is not None and k[1] in ra.marked for k in keys]
    in_b = [k[2] is not None and k[2] in rb.marked for k in keys]
    w = pair_search(f, p.target, lambda x: in_a[x], lambda y: not in_b[y],
                    "t shares the observation of s but lies outside the language")
    return w is None, w


def is_controllable(m: LangRef, uncontrollable: Iterable[str]) -> tuple[bool, Witness | None]:
    """``closure(M)·Σ_uc ∩ L ⊆ closure(M)``; witness ``(s, (σ,))``."""
    f = prefix_closure(m).within
    unc = sorted(set(uncontrollable))
    if f.initial not in f.marked:
        return True, None
    parent: dict[int, tuple[int, str] | None] = {f.initial: None}
    queue = deque([f.initial])

    def word(q: int) -> Word:
        out: list[str] = []
        while parent[q] is not None:
            q, e = parent[q]
            out.append(e)
        return tuple(reversed(out))

    while queue:
        q = queue.popleft()
        for e in unc:
            t = f.delta(q, e)
            if t is not None and t not in f.marked:
                return False, Witness(word(q), (e,), "uncontrollable event leaves the closure")
        for e, t in f.out(q):
            if t in f.marked and t not in parent:
                parent[t] = (q, e)
                queue.append(t)
    return True, None


def is_extension_closed(k: LangRef) -> bool:
    f = k.within
    return reachable(f, f.marked) <= f.marked


def is_prefix_closed(m: LangRef) -> bool:
    """No member string has a non-member prefix."""
    f = m.within
    outside = reachable(f) - f.marked
    return not (reachable(f, outside) & f.marked)


__all__ = [
    "Projection", "Witness", "format_word", "project", "inverse_project", "prefix_closure",
    "supremal_prefix_closed_subset", "right_quotient", "left_quotient",
    "concat_sigma_star_within", "sigma_o_bounded", "pair_search", "is_pre_normal",
    "is_pre_normal_by_cells", "is_normal", "observation_inclusion", "is_controllable",
    "is_extension_closed", "is_prefix_closed", "universal",
]
