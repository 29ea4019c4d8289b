import pytest

from faultsynth.automata import (
    Dfa,
    LangRef,
    complement_within,
    empty_language,
    generated,
    is_language_equal,
    language_union,
    product,
    trim,
)
from faultsynth.faults import faulty_language, non_faulty_language, psi, psi_minus_k
from faultsynth.languages import (
    Projection,
    concat_sigma_star_within,
    format_word,
    inverse_project,
    is_controllable,
    is_extension_closed,
    is_normal,
    is_pre_normal,
    is_pre_normal_by_cells,
    is_prefix_closed,
    left_quotient,
    prefix_closure,
    project,
    right_quotient,
    sigma_o_bounded,
    supremal_prefix_closed_subset,
)
from faultsynth.oracle import enumerate_language, random_plant
from faultsynth.synthesis import Prognosis, SynthesisProblem, synthesize
from faultsynth.verification import critical_nonfaulty

from conftest import alphabet, w, words_dfa


def P(g: Dfa) -> Projection:
    return Projection.observable(g.alphabet)


def words(d: Dfa, n: int = 6) -> set:
    return set(enumerate_language(d, n))


class TestProjection:
    def test_erase_tau(self, G1):
        d = words_dfa(G1.alphabet, ["tau a a b"])
        assert words(project(d, P(G1))) == {w("a a b")}

    def test_observation_length(self, G1):
        assert len(P(G1)(w("a b b f1"))) == 3

    @pytest.mark.parametrize("seed", range(8))
    def test_random_against_enumeration(self, seed):
        g = random_plant(seed)
        p = P(g)
        d = trim(g.with_marked([q for q in g.states if q % 2 == 0]))
        # every projected member of length <= 4 appears in the projection
        proj = project(d, p)
        for s in enumerate_language(d, 4):
            assert proj.accepts(p(s))

    def test_target_must_be_subset(self, G1):
        with pytest.raises(ValueError):
            Projection(G1.alphabet, {"zz"})

    def test_format_word(self):
        assert format_word(()) == "ε"
        assert format_word(w("a b")) == "ab"
        assert format_word(w("tau a")) == "tau a"


class TestInverseProjection:
    def test_self_loops(self):
        obs = alphabet("a")
        full = alphabet("a", "tau")
        inv = inverse_project(words_dfa(obs, ["a"]), full)
        assert inv.accepts(w("tau a tau"))
        assert not inv.accepts(w("tau"))

    def test_galois(self, G1):
        obs = G1.alphabet.restrict(G1.alphabet.observable)
        x = words_dfa(obs, ["a b", "c"])
        back = project(inverse_project(x, G1.alphabet), P(G1))
        assert words(back) == words(x)

    def test_inverse_of_a_within_g1(self, G1):
        obs = G1.alphabet.restrict(G1.alphabet.observable)
        inv = inverse_project(words_dfa(obs, ["a"]), G1.alphabet)
        assert words(product(inv, G1)) == {w("a"), w("tau a")}


class TestClosures:
    def test_closure_of_psi(self, G1):
        c = prefix_closure(psi(G1))
        expect = {(), w("a"), w("a b"), w("a b b"), w("a b b f1"),
                  w("c"), w("c b"), w("c b b"), w("c b b f1")}
        assert words(c.recognizer, 8) == expect

    def test_closure_idempotent(self, G1):
        once = prefix_closure(LangRef(G1))
        assert is_language_equal(prefix_closure(once).recognizer, once.recognizer)

    def test_closure_of_empty(self, G1):
        assert not prefix_closure(LangRef(empty_language(G1.alphabet))).recognizer.marked

    def test_supremal_prefix_closed_subset(self):
        al = alphabet("a b")
        plant = Dfa(al, [(0, "a", 1), (1, "b", 2)], 0)
        m = LangRef(words_dfa(al, ["", "a b"]), plant)
        assert words(supremal_prefix_closed_subset(m).recognizer) == {()}

    def test_supremal_of_closed_input(self, G1):
        m = non_faulty_language(G1)
        sub = supremal_prefix_closed_subset(m)
        assert is_language_equal(trim(sub.recognizer), trim(m.within))

    def test_g1_k2_already_closed(self, G1):
        m = critical_nonfaulty(G1, 2)
        assert is_prefix_closed(m)
        sub = supremal_prefix_closed_subset(m)
        assert is_language_equal(trim(sub.recognizer), trim(m.within))


class TestQuotients:
    def test_right_quotient(self):
        al = alphabet("a b c")
        assert words(right_quotient(words_dfa(al, ["a b c"]), words_dfa(al, ["c"]))) == {w("a b")}

    def test_right_quotient_identity(self, G1):
        eps = words_dfa(G1.alphabet, [""])
        assert is_language_equal(right_quotient(psi(G1).within, eps), psi(G1).within)

    def test_right_quotient_psi(self, G1):
        q = right_quotient(psi(G1).within, sigma_o_bounded(G1.alphabet, 2, "<="))
        got = words(q)
        assert {w("a"), w("c"), w("a b"), w("c b"), w("a b b"), w("c b b")} <= got
        assert w("a b b f1") in got
        assert () not in got

    def test_left_quotient(self):
        al = alphabet("a b c")
        assert words(left_quotient(words_dfa(al, ["a"]), words_dfa(al, ["a b", "a c"]))) \
            == {w("b"), w("c")}

    def test_left_quotient_identity(self, G1):
        eps = words_dfa(G1.alphabet, [""])
        assert is_language_equal(left_quotient(eps, G1), G1)

    def test_left_quotient_rooted(self, G1):
        got = left_quotient(words_dfa(G1.alphabet, ["tau a"]), G1)
        rooted = Dfa(G1.alphabet, {(s, e): t for s, e, t in G1.transitions()}, 6)
        assert is_language_equal(got, trim(rooted))

    def test_concat_sigma_star(self, G1):
        plant = G1
        eps = LangRef(words_dfa(G1.alphabet, [""]), plant)
        assert is_language_equal(concat_sigma_star_within(eps).recognizer, G1)
        empty = LangRef(empty_language(G1.alphabet), plant)
        assert not trim(concat_sigma_star_within(empty).recognizer).marked

    def test_concat_inside_psi_closure(self, G1):
        within = prefix_closure(psi(G1)).recognizer
        m = LangRef(words_dfa(G1.alphabet, ["a b"]), within)
        assert words(concat_sigma_star_within(m).recognizer, 8) == {w("a b"), w("a b b"), w("a b b f1")}


class TestSigmaO:
    def test_le_zero(self):
        al = alphabet("a", "tau")
        d = sigma_o_bounded(al, 0, "<=")
        assert d.accepts(w("tau tau")) and not d.accepts(w("a"))

    def test_ge_zero_is_universal(self):
        al = alphabet("a", "tau")
        d = sigma_o_bounded(al, 0, ">=")
        assert all(d.accepts(s) for s in [(), w("a"), w("tau a tau")])

    def test_le_two(self):
        al = alphabet("a", "tau")
        d = sigma_o_bounded(al, 2, "<=")
        assert d.accepts(w("tau a tau a")) and not d.accepts(w("a a a"))

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            sigma_o_bounded(alphabet("a"), 1, "~")


class TestPreNormality:
    def test_danger_zone_not_pre_normal(self, G1):
        m = language_union(faulty_language(G1), psi_minus_k(G1, 2))
        ok, wit = is_pre_normal(m, P(G1))
        assert not ok
        assert {wit.s, wit.t} == {w("a"), w("tau a")}
        assert P(G1)(wit.s) == P(G1)(wit.t) == w("a")

    def test_critical_part_not_pre_normal(self, G1):
        m = critical_nonfaulty(G1, 2)
        assert not is_pre_normal(m, P(G1))[0]

    def test_whole_plant(self, G1):
        assert is_pre_normal(LangRef(G1, G1), P(G1)) == (True, None)

    def test_psi_minus_two_inside_closure(self, G1):
        closure_psi = prefix_closure(psi(G1)).recognizer
        m = LangRef(psi_minus_k(G1, 2).recognizer, closure_psi)
        assert is_pre_normal(m, P(G1))[0]
        assert is_extension_closed(m)

    def test_cells_route_agrees(self, G1):
        for k in range(3):
            m = critical_nonfaulty(G1, k)
            assert is_pre_normal(m, P(G1))[0] == is_pre_normal_by_cells(m, P(G1))

    def test_empty_is_pre_normal(self, G1):
        assert is_pre_normal(LangRef(empty_language(G1.alphabet), G1), P(G1))[0]


class TestNormalControllable:
    def test_normal_goldens(self, G1):
        assert is_normal(critical_nonfaulty(G1, 1), P(G1))[0]
        assert not is_normal(critical_nonfaulty(G1, 2), P(G1))[0]
        assert is_normal(LangRef(G1, G1), P(G1))[0]

    def test_controllable_plant(self, G1):
        assert is_controllable(LangRef(G1, G1), G1.alphabet.uncontrollable)[0]

    def test_uncontrollable_escape(self):
        al = alphabet("a", "u", uncontrollable="u")
        plant = Dfa(al, [(0, "a", 1), (1, "u", 2)], 0)
        ok, wit = is_controllable(LangRef(words_dfa(al, ["a"]), plant), {"u"})
        assert not ok
        assert (wit.s, wit.t) == (w("a"), w("u"))

    def test_two_step_loop_controllable(self, G1):
        res = synthesize(SynthesisProblem(G1, Prognosis(2)))
        loop = LangRef(generated(res.supervisor), G1)
        assert is_controllable(loop, {"tau", "f1"})[0]


class TestExtensionClosed:
    def test_plant(self, G1):
        assert is_extension_closed(LangRef(G1, G1))

    def test_eps_in_a(self):
        al = alphabet("a")
        plant = Dfa(al, [(0, "a", 1)], 0)
        assert not is_extension_closed(LangRef(words_dfa(al, [""]), plant))

    def test_complement_symmetry(self, G1):
        m = critical_nonfaulty(G1, 2)
        assert is_pre_normal(m, P(G1))[0] == is_pre_normal(complement_within(m), P(G1))[0]
