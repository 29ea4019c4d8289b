import pytest

from faultsynth.automata import LangRef, is_language_equal, is_sublanguage, language_union, trim
from faultsynth.faults import (
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
from faultsynth.languages import (
    Projection,
    is_extension_closed,
    is_pre_normal,
    is_prefix_closed,
    prefix_closure,
)
from faultsynth.automata import complement_within
from faultsynth.oracle import enumerate_language, random_plant

from conftest import faulty_seeds, w, words_dfa


def words(lang: LangRef, n: int = 8) -> set:
    return set(enumerate_language(trim(lang.within), n))


class TestFaultRefine:
    def test_g1_phases(self, G1):
        fr = fault_refine(G1)
        by_phase = {ph: sorted(fr.origin_state(q) for q in fr.states_in(ph)) for ph in Phase}
        assert by_phase[Phase.NO_FAULT] == [0, 1, 2, 3, 5, 6, 7, 8, 9]
        assert by_phase[Phase.JUST_FAULTED] == [4]
        assert by_phase[Phase.POST_FAULT] == [10]
        assert is_language_equal(fr.refined, G1)

    def test_no_fault_plant(self, no_fault):
        fr = fault_refine(no_fault)
        assert fr.states_in(Phase.NO_FAULT) == frozenset(fr.refined.states)

    def test_split_state(self, G2):
        # state 0 of G2 is reached both before and after f2
        fr = fault_refine(G2)
        zero = [q for q in fr.refined.states if fr.origin_state(q) == 0]
        assert len(zero) == 2


class TestFaultyLanguages:
    def test_g2_membership(self, G2):
        assert w("a f2") in faulty_language(G2)
        assert w("lambda a b") in non_faulty_language(G2)
        assert w("a") in non_faulty_language(G2)
        # no non-faulty way back to the initial state
        assert w("lambda a b a") not in non_faulty_language(G2)

    def test_g1_membership(self, G1):
        assert w("c b b f1 c") in faulty_language(G1)

    @pytest.mark.parametrize("name", ["G1", "G2"])
    def test_partition(self, name, request):
        g = request.getfixturevalue(name)
        lf, ln = faulty_language(g), non_faulty_language(g)
        assert is_language_equal(language_union(lf, ln).recognizer, g)
        assert is_language_equal(trim(complement_within(lf).recognizer), trim(ln.within))


class TestPsi:
    def test_g1(self, G1):
        assert words(psi(G1)) == {w("a b b f1"), w("c b b f1")}

    def test_g2(self, G2):
        got = words(psi(G2), 6)
        assert w("a f2") in got and w("a f2 b a f2") in got

    def test_no_fault(self, no_fault):
        assert not words(psi(no_fault))


class TestPsiMinusK:
    def test_g1_k2(self, G1):
        assert words(psi_minus_k(G1, 2)) == {
            w("a"), w("c"), w("a b"), w("c b"), w("a b b"), w("c b b"), w("a b b f1"), w("c b b f1")}

    def test_g1_k1(self, G1):
        assert words(psi_minus_k(G1, 1)) == {
            w("a b"), w("c b"), w("a b b"), w("c b b"), w("a b b f1"), w("c b b f1")}

    def test_g1_k2_by_language_equality(self, G1):
        ref = words_dfa(G1.alphabet, ["a", "c", "a b", "c b", "a b b", "c b b", "a b b f1", "c b b f1"])
        assert is_language_equal(trim(psi_minus_k(G1, 2).within), ref)

    @pytest.mark.parametrize("k", [0, 1, 3])
    def test_no_fault(self, no_fault, k):
        assert not words(psi_minus_k(no_fault, k))

    def test_negative_k(self, G1):
        with pytest.raises(ValueError):
            psi_minus_k(G1, -1)


class TestObservationCounted:
    def test_l_f_geq_zero(self, G2):
        assert is_language_equal(trim(l_f_geq(G2, 0).within), trim(faulty_language(G2).within))

    def test_l_f_geq_four(self, G2):
        m = l_f_geq(G2, 4)
        assert w("a f2 b a f2 b") in m
        assert w("a f2") not in m

    def test_l_f_geq_four_pre_normal(self, G2):
        assert is_pre_normal(l_f_geq(G2, 4), Projection.observable(G2.alphabet))[0]

    def test_l_f_lt(self, G2):
        m = l_f_lt(G2, 2)
        assert w("a f2") in m and () in m
        assert w("a f2 b") not in m
        assert not words(l_f_lt(G2, 0))

    def test_l_psi_geq(self, G2):
        m = l_psi_geq(G2, 2)
        assert w("a f2 b a") in m
        assert w("a f2 b") not in m
        assert is_language_equal(trim(l_psi_geq(G2, 0).within), trim(faulty_language(G2).within))

    def test_l_psi_geq_no_fault(self, no_fault):
        assert not words(l_psi_geq(no_fault, 2))

    def test_min_fault_observations(self, G1, G2, no_fault):
        assert min_fault_observations(G1) == 3
        assert min_fault_observations(G2) == 1
        assert min_fault_observations(no_fault) is None


@pytest.mark.parametrize("seed", faulty_seeds(40))
def test_danger_zone_properties(seed):
    """Inside the prefixes of fault-ending strings the danger zone is
    pre-normal and extension-closed, and its complement is prefix-closed;
    the zone grows with k and contains every fault-ending string."""
    g = random_plant(seed)
    closure_psi = prefix_closure(psi(g)).recognizer
    p = Projection.observable(g.alphabet)
    prev = None
    for k in range(3):
        zone = psi_minus_k(g, k)
        inside = LangRef(zone.recognizer, closure_psi)
        assert is_pre_normal(inside, p)[0]
        assert is_extension_closed(inside)
        assert is_prefix_closed(complement_within(inside))
        if prev is not None:
            assert is_sublanguage(trim(prev.within), trim(zone.within))
        prev = zone
    assert is_sublanguage(trim(psi(g).within), trim(psi_minus_k(g, 0).within))


@pytest.mark.parametrize("seed", range(40))
def test_l_f_geq_pre_normality_monotone(seed):
    g = random_plant(seed)
    p = Projection.observable(g.alphabet)
    verdicts = [is_pre_normal(l_f_geq(g, n), p)[0] for n in range(6)]
    for a, b in zip(verdicts, verdicts[1:]):
        assert not a or b
