"""Property-based checks of language-level identities on small random
automata, each compared against bounded brute-force enumeration."""

import itertools

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from faultsynth.automata import (
    Dfa,
    LangRef,
    complement_within,
    generated,
    is_language_equal,
    is_spa,
    is_sublanguage,
    language_difference,
    language_intersection,
    language_union,
    minimize,
    product,
    spa_refine,
    sync_product,
)
from faultsynth.languages import (
    Projection,
    inverse_project,
    is_pre_normal,
    is_pre_normal_by_cells,
    prefix_closure,
    project,
    supremal_prefix_closed_subset,
)
from faultsynth.oracle import enumerate_language

from conftest import alphabet

SIGMA = alphabet("a b", "u")
P = Projection.observable(SIGMA)
DEPTH = 5

settings.register_profile("faultsynth", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("faultsynth")


@st.composite
def dfas(draw, alpha=SIGMA, max_states: int = 4, all_marked: bool = False) -> Dfa:
    n = draw(st.integers(1, max_states))
    delta = {}
    for q in range(n):
        for e in alpha.names:
            t = draw(st.one_of(st.none(), st.integers(0, n - 1)))
            if t is not None:
                delta[(q, e)] = t
    marked = range(n) if all_marked else [q for q in range(n) if draw(st.booleans())]
    return Dfa(alpha, delta, 0, marked, range(n))


def words(d: Dfa, depth: int = DEPTH) -> set[tuple[str, ...]]:
    return set(enumerate_language(d, depth))


def all_words(alpha, depth: int = DEPTH):
    for n in range(depth + 1):
        yield from itertools.product(sorted(alpha.names), repeat=n)


def member(m: LangRef, word) -> bool:
    return word in m


# --------------------------------------------------------------- automata
@given(dfas(), dfas(), dfas())
def test_product_commutative_associative(a, b, c):
    assert is_language_equal(product(a, b), product(b, a))
    assert is_language_equal(product(product(a, b), c), product(a, product(b, c)))
    assert words(product(a, b)) == words(a) & words(b)


@given(dfas(alphabet("a c", "u")), dfas(alphabet("a b")), dfas(alphabet("b c")))
def test_sync_product_laws(a, b, c):
    ab, ba = sync_product([a, b]), sync_product([b, a])
    assert is_language_equal(ab, ba)
    left = sync_product([sync_product([a, b]), c])
    right = sync_product([a, sync_product([b, c])])
    assert is_language_equal(left, right)
    assert is_language_equal(left, sync_product([a, b, c]))
    pa, pb = Projection(ab.alphabet, a.alphabet.names), Projection(ab.alphabet, b.alphabet.names)
    for word in all_words(ab.alphabet, 4):
        assert ab.accepts(word) == (a.accepts(pa(word)) and b.accepts(pb(word)))


@given(dfas(), dfas(all_marked=True))
def test_complement_involution(m, plant):
    ref = LangRef(m, plant)
    once = complement_within(ref)
    twice = complement_within(once)
    for word in words(plant):
        assert member(once, word) == (not member(ref, word))
        assert member(twice, word) == member(ref, word)


@given(dfas(), dfas(), dfas(all_marked=True))
def test_boolean_operations(x, y, plant):
    a, b = LangRef(x, plant), LangRef(y, plant)
    u, i, d = language_union(a, b), language_intersection(a, b), language_difference(a, b)
    for word in words(plant):
        ia, ib = member(a, word), member(b, word)
        assert member(u, word) == (ia or ib)
        assert member(i, word) == (ia and ib)
        assert member(d, word) == (ia and not ib)


@given(dfas(max_states=5))
def test_minimize_preserves_language(d):
    m = minimize(d)
    assert is_language_equal(m, d)
    assert m.n_states <= d.n_states + 1
    assert words(m) == words(d)


@given(dfas(alphabet("a b", "u v"), max_states=5, all_marked=False))
def test_spa_refine(d):
    r = spa_refine(d)
    assert is_spa(r)
    assert is_language_equal(r, d)
    assert is_language_equal(generated(r), generated(d))


# ------------------------------------------------------------- projections
@given(dfas(alphabet("a b")))
def test_galois_projection_of_inverse(x):
    back = project(inverse_project(x, SIGMA), P)
    assert is_language_equal(back, x)


@given(dfas())
def test_galois_inverse_of_projection(x):
    obs = project(x, P)
    big = inverse_project(obs, SIGMA)
    assert is_sublanguage(x, big)
    for word in words(x):
        assert obs.accepts(P(word))


# ---------------------------------------------------------- pre-normality
def brute_pre_normal(m: LangRef, plant: Dfa, depth: int = DEPTH) -> bool:
    seen_in, seen_out = set(), set()
    for word in words(plant, depth):
        (seen_in if member(m, word) else seen_out).add(P(word))
    return not (seen_in & seen_out)


@given(dfas(), dfas(all_marked=True))
def test_pre_normality_symmetry(m, plant):
    ref = LangRef(m, plant)
    ok, wit = is_pre_normal(ref, P)
    assert ok == is_pre_normal(complement_within(ref), P)[0]
    assert ok == is_pre_normal_by_cells(ref, P)
    if ok:
        assert brute_pre_normal(ref, plant)
    else:
        assert P(wit.s) == P(wit.t)
        assert member(ref, wit.s) != member(ref, wit.t)
        assert plant.generates(wit.s) and plant.generates(wit.t)


@given(dfas(all_marked=True), dfas(alphabet("a b"), all_marked=True), dfas(alphabet("a b")))
def test_pre_normality_transitive(m, x, y):
    """Nested ``L' <= L <= M`` built as observation-closed cuts, so both
    hypotheses hold by construction."""
    l_dfa = generated(product(m, inverse_project(x, SIGMA)))
    assume(l_dfa.marked)
    l_prime = LangRef(product(l_dfa, inverse_project(y, SIGMA)), l_dfa)
    assert is_pre_normal(l_prime, P)[0]
    assert is_pre_normal(LangRef(l_dfa, m), P)[0]
    assert is_pre_normal(LangRef(l_prime.recognizer, m), P)[0]


@given(dfas(all_marked=True), dfas(), dfas())
def test_pre_normality_transitive_filtered(m, x, y):
    """Same conclusion with arbitrary nested languages, keeping only the
    draws where both hypotheses happen to hold."""
    l_dfa = generated(product(m, x))
    assume(l_dfa.marked)
    l_prime = LangRef(product(l_dfa, y), l_dfa)
    assume(is_pre_normal(l_prime, P)[0] and is_pre_normal(LangRef(l_dfa, m), P)[0])
    assert is_pre_normal(LangRef(l_prime.recognizer, m), P)[0]


# ------------------------------------------------------- prefix operations
@given(dfas())
def test_prefix_closure_brute(d):
    pc = prefix_closure(LangRef(d)).recognizer
    expect = {word[:i] for word in words(d, DEPTH + 2) for i in range(len(word) + 1)}
    assert {x for x in words(pc) if len(x) <= DEPTH} == {x for x in expect if len(x) <= DEPTH}


@settings(max_examples=40)
@given(dfas(alphabet("a b"), max_states=3), dfas(alphabet("a b"), max_states=3, all_marked=True))
def test_supremal_prefix_closed_subset_brute(m, plant):
    """Against every subset of a small finite language: the result is the
    largest prefix-closed subset."""
    ref = LangRef(m, plant)
    pool = sorted(w for w in words(plant, 3) if member(ref, w))
    assume(len(pool) <= 12)
    sup = supremal_prefix_closed_subset(ref)
    got = {w for w in pool if member(sup, w)}
    best: set = set()
    for r in range(len(pool) + 1):
        for subset in itertools.combinations(pool, r):
            s = set(subset)
            if all(w[:i] in s for w in s for i in range(len(w))) and len(s) > len(best):
                best = s
    assert got == best
    assert all(w[:i] in got for w in got for i in range(len(w)))
