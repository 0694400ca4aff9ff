"""
Why locality is hard for NFAs
=============================

Universality of an NFA reduces to locality of another NFA. ``greibach_gadget``
wraps a seed automaton for L in fresh markers so the result is local exactly
when L is all words. The gadget is always infix-free as well.
"""

from locus import Nfa, accepts, cartesian_oracle, format_word, greibach_gadget
from locus import is_infix_free, is_local_nfa, verify_reduction

universal_seed = Nfa("b", 1, [0], [0], [(0, "b", 0)])   # b*
single_word = Nfa("b", 2, [0], [1], [(0, "b", 1)])      # {b}

for name, seed in (("b*", universal_seed), ("{b}", single_word)):
    g = greibach_gadget(seed)
    print(f"seed {name}: gadget has {g.automaton.state_count} states,",
          "fresh symbols", g.fresh_symbols.as_dict())
    print("  local:", is_local_nfa(g.automaton).verdict,
          " infix-free:", is_infix_free(g.automaton).verdict)

# For {b} the missing word is the empty word, and three words show the failure.
g = greibach_gadget(single_word).automaton
for w in [("#1", "#2", "b", "#3"), ("#1", "a", "a", "#2", "#3"), ("#1", "#2", "#3")]:
    print(f"  {format_word(w):<16} accepted={accepts(g, w)}")

# The bounded brute-force oracle finds the same kind of crossing on its own.
print("  oracle:", cartesian_oracle(g, 6))

# All of the above in one call.
print(verify_reduction(single_word))
