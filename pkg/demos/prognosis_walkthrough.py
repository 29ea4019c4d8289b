"""Predicting a fault on the eleven-state plant, then enforcing prediction.

    python3 demos/prognosis_walkthrough.py
"""

from faultsynth import (
    Prognosis,
    SynthesisProblem,
    check_k_prognosable,
    max_prognosis_horizon,
    observer,
    psi,
    psi_minus_k,
    synthesize,
    trim,
)
from faultsynth.languages import format_word
from faultsynth.oracle import enumerate_language
from faultsynth.plants import g1


def show(title: str, lang, depth: int = 6) -> None:
    words = enumerate_language(trim(lang.within), depth)
    print(f"{title}: {{{', '.join(format_word(x) for x in words)}}}")


g = g1()
print(f"plant {g.name}: {g.n_states} states, events {sorted(g.alphabet.names)}")
show("fault-ending strings", psi(g))
for k in (2, 1):
    show(f"strings at most {k} observations before the fault", psi_minus_k(g, k))

print("\nobserver cells:", ", ".join(observer(g).cell_labels()))
for k in (1, 2):
    r = check_k_prognosable(g, k)
    line = f"{k}-prognosable: {r.verdict}"
    if r.witness:
        line += f"  (s={format_word(r.witness.s)}, t={format_word(r.witness.t)} look alike)"
    print(line)
print("largest horizon:", max_prognosis_horizon(g))

# two-step warning needs a supervisor; tau and f1 cannot be disabled
problem = SynthesisProblem(g, Prognosis(2), frozenset({"tau", "f1"}))
res = synthesize(problem)
print("\nsynthesis for a 2-step warning:")
for t in res.trace:
    print(f"  {t.step:<12} removed {', '.join(t.removed) or '-':<8} -> {t.size} states")
sup = res.supervisor
print("closed loop:", "; ".join(f"{sup.label(s)} -{e}-> {sup.label(t)}" for s, e, t in sup.transitions()))
print("closed loop 2-prognosable:", check_k_prognosable(sup, 2, force=True).verdict)
