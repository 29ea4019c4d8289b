"""Modular plants: local supervisors with global guarantees.

Each component gets its own supervisor; the global product is only built on
request, under a state budget, to cross-check the guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .automata import (
    Alphabet,
    Dfa,
    LangRef,
    complement_within,
    generated,
    is_language_equal,
    language_union,
    product,
    sync_product,
    trim,
)
from .errors import (
    AssumptionViolated,
    AttributeConflict,
    ComponentSynthesisFailed,
    ObservabilityIncompatibility,
)
from .faults import faulty_language, l_f_geq, non_faulty_language
from .languages import prefix_closure, sigma_o_bounded
from .synthesis import Diagnosis, Mode, Prognosis, SynthesisProblem, SynthesisResult, synthesize
from .verification import (
    VerdictReport,
    check_diagnosable,
    check_prognosable,
    critical_nonfaulty,
    observer,
    require_live_convergent,
)

DEFAULT_BUDGET = 1_000_000


class Guarantee(str, Enum):
    PROGNOSABLE = "Prognosable"
    DIAGNOSABLE = "Diagnosable"
    NOT_GUARANTEED = "NotGuaranteed"


@dataclass(frozen=True)
class ModularPlant:
    components: tuple[Dfa, ...]

    def __init__(self, components: Sequence[Dfa]):
        object.__setattr__(self, "components", tuple(components))

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.merge([g.alphabet for g in self.components])

    @property
    def shared_events(self) -> frozenset[str]:
        seen: dict[str, int] = {}
        for g in self.components:
            for e in g.alphabet.names:
                seen[e] = seen.get(e, 0) + 1
        return frozenset(e for e, n in seen.items() if n > 1)

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ModularSynthesisResult:
    local_supervisors: tuple[Dfa, ...]
    local_results: tuple[SynthesisResult, ...]
    nonconflicting: bool
    global_guarantee: Guarantee
    cross_check: VerdictReport | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)


def validate(mp: ModularPlant) -> list[str]:
    """All violated structural requirements, as messages (empty when fine)."""
    errors = []
    if len(mp) < 2:
        errors.append("a modular plant needs at least two components")
    comps = mp.components
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            ai, aj = comps[i].alphabet, comps[j].alphabet
            for e in sorted(set(ai.names) & set(aj.names)):
                x, y = ai[e], aj[e]
                if x.observable != y.observable:
                    errors.append(f"event {e!r} is observable in component {i + 1 if x.observable else j + 1} only")
                elif x != y:
                    errors.append(f"event {e!r} has different attributes in components {i + 1} and {j + 1}")
    try:
        mp.alphabet
    except (AttributeConflict, ObservabilityIncompatibility):
        pass
    return errors


def _lift_union(parts: list[list[Dfa]]) -> LangRef:
    """Union over the terms of synchronous products ``parts[t]``."""
    langs = [LangRef(sync_product(ds)) for ds in parts]
    out = langs[0]
    for lang in langs[1:]:
        out = language_union(out, lang)
    return LangRef(trim(out.recognizer))


def compose_global_faulty(mp: ModularPlant) -> tuple[LangRef, LangRef]:
    """Global faulty language (some component faulty, the rest anything)
    and global fault-free language (every component fault-free)."""
    comps = mp.components
    plants = [generated(g) for g in comps]
    terms = [[faulty_language(g).recognizer if j == i else plants[j] for j in range(len(comps))]
             for i, g in enumerate(comps)]
    l_f = _lift_union(terms)
    l_n = LangRef(sync_product([non_faulty_language(g).recognizer for g in comps]))
    return l_f, l_n


def psi_minus_zero_global(mp: ModularPlant) -> LangRef:
    """Fault-free global strings outside the zero-step danger zone, built
    from the components: every component is fault-free and outside its own
    danger zone."""
    return LangRef(sync_product([critical_nonfaulty(g, 0).recognizer for g in mp.components]))


def removal_union(mp: ModularPlant, ks: Sequence[LangRef]) -> LangRef:
    """``L`` minus the product of the ``K_i``, written as the union over i of
    ``(L_i minus K_i)`` composed with the other plant languages."""
    comps = mp.components
    plants = [generated(g) for g in comps]
    terms = []
    for i, g in enumerate(comps):
        diff = complement_within(LangRef(ks[i].recognizer, plants[i])).recognizer
        terms.append([diff if j == i else plants[j] for j in range(len(comps))])
    return _lift_union(terms)


def faulty_union(mp: ModularPlant, ks: Sequence[LangRef]) -> LangRef:
    """Union over i of ``K_i`` composed with the other plant languages."""
    comps = mp.components
    plants = [generated(g) for g in comps]
    terms = [[ks[i].recognizer if j == i else plants[j] for j in range(len(comps))]
             for i in range(len(comps))]
    return _lift_union(terms)


def check_nonconflicting(langs: Sequence[LangRef]) -> bool:
    closed_of_product = prefix_closure(LangRef(sync_product([l.recognizer for l in langs])))
    product_of_closed = sync_product([prefix_closure(l).recognizer for l in langs])
    return is_language_equal(closed_of_product.recognizer, product_of_closed)


def modular_enforce(mp: ModularPlant, mode: Mode) -> ModularSynthesisResult:
    errors = validate(mp)
    if errors:
        raise ValueError("; ".join(errors))
    if isinstance(mode, Prognosis) and mode.k != 0:
        raise ValueError("modular enforcement only supports zero-step prognosis (k=0)")
    for g in mp.components:
        require_live_convergent(g)
    results = []
    for i, g in enumerate(mp.components):
        r = synthesize(SynthesisProblem(g, mode))
        if r.no_solution:
            raise ComponentSynthesisFailed(i + 1, f"component {i + 1} ({g.name}) has no solution")
        results.append(r)
    sups = tuple(r.supervisor for r in results)
    nonconflicting = check_nonconflicting([LangRef(s) for s in sups])
    if not nonconflicting:
        guarantee = Guarantee.NOT_GUARANTEED
    elif isinstance(mode, Prognosis):
        guarantee = Guarantee.PROGNOSABLE
    else:
        guarantee = Guarantee.DIAGNOSABLE
    return ModularSynthesisResult(sups, tuple(results), nonconflicting, guarantee)


def cross_check_global(mp: ModularPlant, result: ModularSynthesisResult, mode: Mode,
                       budget: int = DEFAULT_BUDGET) -> VerdictReport:
    """Build the closed loop explicitly and run the monolithic check."""
    loop = sync_product(result.local_supervisors, max_states=budget)
    notes: tuple[str, ...] = ()
    try:
        require_live_convergent(loop)
    except AssumptionViolated as exc:
        notes = (f"closed loop violates the standing assumptions: {exc}",)
    if isinstance(mode, Diagnosis):
        r = check_diagnosable(loop, force=True)
    else:
        r = check_prognosable(loop, force=True)
    return VerdictReport(r.verdict, r.property, {**r.parameters, "states": loop.n_states},
                         r.witness, r.notes + notes)


def lf_geq_composed(mp: ModularPlant) -> LangRef:
    """Union over i of the faulty strings of component i with at least
    ``N_io`` local observations, composed with the other components' strings
    carrying at least their own ``N_jo`` observations."""
    comps = mp.components
    n_o = [observer(g).n_cells for g in comps]
    terms = []
    for i, g in enumerate(comps):
        row = []
        for j, h in enumerate(comps):
            if j == i:
                row.append(l_f_geq(h, n_o[j]).recognizer)
            else:
                row.append(product(generated(h), sigma_o_bounded(h.alphabet, n_o[j], ">=")))
        terms.append(row)
    return _lift_union(terms)


def lf_geq_global(mp: ModularPlant, n: int) -> LangRef:
    return l_f_geq(sync_product([generated(g) for g in mp.components]), n)
