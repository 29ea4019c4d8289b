"""Local supervisors for a two-component plant, checked against the
composed closed loop.

    python3 demos/modular_walkthrough.py
"""

import warnings

from faultsynth import ModularPlant, Prognosis, cross_check_global, modular_enforce
from faultsynth.plants import g1, g2

warnings.simplefilter("ignore")

mp = ModularPlant([g1(modified=True), g2()])
print("shared events:", sorted(mp.shared_events))

res = modular_enforce(mp, Prognosis(0))
for g, sup, r in zip(mp.components, res.local_supervisors, res.local_results):
    print(f"{g.name}: {g.n_states} states -> supervisor with {sup.n_states} "
          f"({r.iterations} filter pass(es))")
print("nonconflicting:", res.nonconflicting, "| guarantee:", res.global_guarantee.value)

check = cross_check_global(mp, res, Prognosis(0))
print(f"composed closed loop: {check.parameters['states']} states, prognosable {check.verdict}")
for note in check.notes:
    print("note:", note)
