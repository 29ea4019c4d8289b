"""Regenerate the JSON plant files in demos/plants/."""

from pathlib import Path

from faultsynth import Dfa, save_automaton
from faultsynth.automata import Alphabet, Event
from faultsynth.plants import g1, g2

here = Path(__file__).parent / "plants"
here.mkdir(exist_ok=True)
save_automaton(g1(), here / "g1.json")
save_automaton(g1(modified=True), here / "g1mod.json")
save_automaton(g2(), here / "g2.json")

# after an uncontrollable silent step the fault can no longer be told apart
alpha = Alphabet([Event("a", True, True, False), Event("u", False, False, False),
                  Event("f", False, False, True)])
tiny = Dfa(alpha, [(0, "f", 1), (0, "u", 2), (1, "a", 1), (2, "a", 2)], 0, name="tiny-blocked")
save_automaton(tiny, here / "tiny-blocked.json")
