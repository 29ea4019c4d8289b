"""A fault that can be diagnosed but not predicted.

    python3 demos/diagnosis_walkthrough.py
"""

import warnings

from faultsynth import (
    build_verifier,
    check_diagnosable,
    check_prognosable,
    observer,
    uncertain_states,
)
from faultsynth.languages import format_word
from faultsynth.plants import g2

warnings.simplefilter("ignore")

g = g2()
obs = observer(g)
print(f"plant {g.name}: observer has {obs.n_cells} cells: {', '.join(obs.cell_labels())}")

r = check_prognosable(g)
print("prognosable:", r.verdict)
if r.witness:
    print(f"  {format_word(r.witness.s)} and {format_word(r.witness.t)} share an observation")

v = build_verifier(g)
print(f"\nverifier: {len(v.pairs)} state pairs")
for n in range(obs.n_cells + 1):
    bad = sorted(v.label(v.index(p)) for p in uncertain_states(v, g, n))
    print(f"  after {n} observations the uncertain pairs are {bad or 'none'}")

d = check_diagnosable(g)
print(f"\ndiagnosable: {d.verdict}, detected within {d.parameters['N']} observations"
      f" (bound {d.parameters['N_o']})")
for note in d.notes:
    print("note:", note)
