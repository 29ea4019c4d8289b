"""Where the inclusion test and the pair search disagree.

Here every fault-free string ``b...b`` can fault right away, so all of them
sit in the danger zone and the inclusion test has nothing to check.  Yet
``b b b ...`` may also go on forever without a fault, so no warning is ever
reliable; the pair search reports exactly that.

    python3 demos/inclusion_gap.py
"""

from faultsynth import check_k_prognosable, trim
from faultsynth.languages import format_word
from faultsynth.oracle import k_prognosis_counterexample, oracle_k_prognosable, random_plant
from faultsynth.verification import critical_nonfaulty

g = random_plant(77)
print(f"{g.name}: {g.n_states} states")
for s, e, t in g.transitions():
    print(f"  {s} -{e}-> {t}")

crit = trim(critical_nonfaulty(g, 0).within)
print("\nfault-free strings outside the danger zone:", "none" if not crit.marked else "some")
print("inclusion test says prognosable:", check_k_prognosable(g, 0).verdict)
print("pair search says prognosable:  ", oracle_k_prognosable(g, 0))
cx = k_prognosis_counterexample(g, 0)
if cx:
    print(f"  faulty {format_word(cx[0])} vs fault-free {format_word(cx[1])}")
