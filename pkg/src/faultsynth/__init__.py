"""Verification and supervisory enforcement of fault prognosability and
diagnosability for partially observed finite automata."""

from .automata import (
    Alphabet,
    Dfa,
    Event,
    LangRef,
    accessible,
    closure,
    complement_within,
    generated,
    is_convergent,
    is_language_equal,
    is_live,
    is_spa,
    is_strict_subautomaton,
    is_sublanguage,
    language_difference,
    language_intersection,
    language_union,
    minimize,
    observer_cells,
    product,
    spa_refine,
    subset_construction,
    sync_product,
    trim,
)
from .errors import (
    AlphabetMismatch,
    AssumptionViolated,
    AttributeConflict,
    BudgetExceeded,
    ComponentSynthesisFailed,
    EmptyFaultLanguage,
    FaultSynthError,
    InvalidAutomaton,
    NotPrognosable,
    ObservabilityIncompatibility,
    ParseError,
    ProductTooLarge,
)
from .faults import (
    FaultRefinedPlant,
    Phase,
    fault_refine,
    faulty_language,
    l_f_geq,
    l_f_lt,
    l_psi_geq,
    min_fault_observations,
    non_faulty_language,
    psi,
    psi_minus_k,
)
from .io import dumps_automaton, load_automaton, loads_automaton, save_automaton
from .languages import (
    Projection,
    Witness,
    concat_sigma_star_within,
    inverse_project,
    is_controllable,
    is_normal,
    is_pre_normal,
    left_quotient,
    prefix_closure,
    project,
    right_quotient,
    supremal_prefix_closed_subset,
)
from .modular import (
    Guarantee,
    ModularPlant,
    ModularSynthesisResult,
    check_nonconflicting,
    compose_global_faulty,
    cross_check_global,
    modular_enforce,
    validate,
)
from .synthesis import (
    Diagnosis,
    Prognosis,
    SynthesisProblem,
    SynthesisResult,
    prepare_h1,
    satisfies_all,
    synthesize,
)
from .verification import (
    UNBOUNDED,
    VerdictReport,
    VerifierAutomaton,
    build_verifier,
    check_diagnosable,
    check_k_prognosable,
    check_pro_eq_dia,
    check_prognosable,
    max_prognosis_horizon,
    observer,
    uncertain_states,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "AssumptionViolated",
    "AttributeConflict",
    "BudgetExceeded",
    "ComponentSynthesisFailed",
    "Dfa",
    "Diagnosis",
    "EmptyFaultLanguage",
    "Event",
    "FaultRefinedPlant",
    "FaultSynthError",
    "Guarantee",
    "InvalidAutomaton",
    "LangRef",
    "ModularPlant",
    "ModularSynthesisResult",
    "NotPrognosable",
    "ObservabilityIncompatibility",
    "ParseError",
    "Phase",
    "ProductTooLarge",
    "Prognosis",
    "Projection",
    "SynthesisProblem",
    "SynthesisResult",
    "UNBOUNDED",
    "VerdictReport",
    "VerifierAutomaton",
    "Witness",
    "accessible",
    "build_verifier",
    "check_diagnosable",
    "check_k_prognosable",
    "check_nonconflicting",
    "check_pro_eq_dia",
    "check_prognosable",
    "closure",
    "complement_within",
    "compose_global_faulty",
    "concat_sigma_star_within",
    "cross_check_global",
    "dumps_automaton",
    "fault_refine",
    "faulty_language",
    "generated",
    "inverse_project",
    "is_controllable",
    "is_convergent",
    "is_language_equal",
    "is_live",
    "is_normal",
    "is_pre_normal",
    "is_spa",
    "is_strict_subautomaton",
    "is_sublanguage",
    "l_f_geq",
    "l_f_lt",
    "l_psi_geq",
    "language_difference",
    "language_intersection",
    "language_union",
    "left_quotient",
    "load_automaton",
    "loads_automaton",
    "max_prognosis_horizon",
    "min_fault_observations",
    "minimize",
    "modular_enforce",
    "non_faulty_language",
    "observer",
    "observer_cells",
    "prefix_closure",
    "prepare_h1",
    "product",
    "project",
    "psi",
    "psi_minus_k",
    "right_quotient",
    "satisfies_all",
    "save_automaton",
    "spa_refine",
    "subset_construction",
    "supremal_prefix_closed_subset",
    "sync_product",
    "synthesize",
    "trim",
    "uncertain_states",
    "validate",
    "__version__",
]
