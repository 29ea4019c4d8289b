"""Small reference plants used throughout the tests and demos."""

from __future__ import annotations

from .automata import Alphabet, Dfa, Event


def _alphabet(observable: str, silent: str, faults: str) -> Alphabet:
    # controllable exactly when observable
    evs = [Event(n, True, True, False) for n in observable.split()]
    evs += [Event(n, False, False, False) for n in silent.split()]
    evs += [Event(n, False, False, True) for n in faults.split()]
    return Alphabet(evs)


def g1(modified: bool = False) -> Dfa:
    """Eleven-state plant with one fault after ``abb`` or ``cbb``.

    With ``modified=True`` the edge ``6 -a-> 7`` becomes ``6 -b-> 7`` so that
    the observation ``abb`` no longer tells whether the fault is coming.
    """
    alpha = _alphabet("a b c", "tau", "f1")
    edges = [
        (0, "a", 1), (0, "c", 9), (9, "b", 2), (1, "b", 2), (2, "b", 3), (3, "f1", 4),
        (0, "tau", 5), (5, "a", 6), (6, "b" if modified else "a", 7), (7, "b", 8),
        (4, "c", 10), (8, "c", 8), (10, "c", 10),
    ]
    return Dfa(alpha, edges, 0, name="G1m" if modified else "G1")


def g2() -> Dfa:
    """Five-state plant whose fault is diagnosable but not prognosable."""
    alpha = _alphabet("a b", "lambda", "f2")
    edges = [(0, "a", 1), (1, "f2", 2), (2, "b", 0), (0, "lambda", 3), (3, "a", 4), (4, "b", 4)]
    return Dfa(alpha, edges, 0, name="G2")
