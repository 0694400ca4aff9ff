"""
Glushkov automata and marked expressions
========================================

The position automaton of a regular expression has one state per literal
occurrence plus a start state. Renaming every occurrence apart gives a
marked expression, whose language is always local.
"""

from locus import enumerate_words, format_word, glushkov, is_local_nfa
from locus import marked_automaton, parse_regex, regex_semantics_enumerate
from locus.dot import to_dot

for text in ["(ab)*", "a+aa", "a(a+b)*a"]:
    r = parse_regex(text, "ab")
    a = glushkov(r, "ab")
    words = enumerate_words(a, 4)
    assert words == regex_semantics_enumerate(r, 4)
    print(f"{text:<10} {a.state_count} states, local={is_local_nfa(a).verdict}, "
          f"marked local={is_local_nfa(marked_automaton(r)).verdict}")
    print("           ", [format_word(w) for w in words])

print(to_dot(marked_automaton(parse_regex("a(a+b)*a", "ab")), "marked"))
