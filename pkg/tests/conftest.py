from __future__ import annotations

import functools
import warnings

import pytest

from faultsynth.automata import Alphabet, Dfa, Event
from faultsynth.oracle import random_plant
from faultsynth.plants import g1, g2


def w(text: str) -> tuple[str, ...]:
    """``"tau a b"`` -> ``("tau", "a", "b")``; the empty string is ``""``."""
    return tuple(text.split())


def alphabet(obs: str = "", unobs: str = "", faults: str = "", uncontrollable: str = "") -> Alphabet:
    unc = set(uncontrollable.split())
    evs = [Event(n, True, n not in unc, False) for n in obs.split()]
    evs += [Event(n, False, n not in unc, False) for n in unobs.split()]
    evs += [Event(n, False, False, True) for n in faults.split()]
    return Alphabet(evs)


def words_dfa(alpha: Alphabet, words) -> Dfa:
    """Trie recognizer of a finite set of words (given as strings or tuples)."""
    delta: dict[tuple[int, str], int] = {}
    marked = set()
    n = 1
    for word in words:
        word = w(word) if isinstance(word, str) else tuple(word)
        q = 0
        for e in word:
            if (q, e) not in delta:
                delta[(q, e)] = n
                n += 1
            q = delta[(q, e)]
        marked.add(q)
    return Dfa(alpha, delta, 0, marked, range(n))


@pytest.fixture
def G1() -> Dfa:
    return g1()


@pytest.fixture
def G1m() -> Dfa:
    return g1(modified=True)


@pytest.fixture
def G2() -> Dfa:
    return g2()


@pytest.fixture
def no_fault() -> Dfa:
    return Dfa(alphabet("a b", "u"), [(0, "a", 1), (1, "u", 0), (0, "b", 0)], 0, name="NF")


@functools.lru_cache(maxsize=None)
def corpus_plant(seed: int) -> Dfa:
    return random_plant(seed)


@pytest.fixture(autouse=True)
def _quiet_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        yield


def faulty_seeds(n: int, start: int = 0) -> list[int]:
    """First ``n`` corpus seeds whose plant can actually fault."""
    from faultsynth.faults import min_fault_observations

    out, s = [], start
    while len(out) < n:
        if min_fault_observations(corpus_plant(s)) is not None:
            out.append(s)
        s += 1
    return out
