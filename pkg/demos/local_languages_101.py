"""
Local languages in a few lines
==============================

A local language is pinned down by its first letters, its last letters and
the two-letter factors it allows. This script builds one from such a
description, reads the description back off an arbitrary automaton, and
asks whether that automaton's language is local.
"""

from locus import LocalSpec, Nfa, enumerate_words, extract_local_spec, format_word
from locus import is_local_dfa, is_local_nfa, local_closure, spec_to_dfa, determinize

# (ab)* as a description: start with a, end with b, alternate.
spec = LocalSpec("ab", first={"a"}, last={"b"}, allowed_bigrams={("a", "b"), ("b", "a")},
                 accepts_epsilon=True)
print(spec.to_json())
d = spec_to_dfa(spec)
print("words up to 6:", [format_word(w) for w in enumerate_words(d, 6)])

# {ab, ba} is not local: the description it induces also admits "a".
ab_ba = Nfa("ab", 4, [0], [3], [(0, "a", 1), (1, "b", 3), (0, "b", 2), (2, "a", 3)])
s = extract_local_spec(ab_ba)
print("first", sorted(s.first), "last", sorted(s.last), "forbidden", sorted(s.forbidden_bigrams))
closure = local_closure(ab_ba)
print("closure up to 3:", [format_word(w) for w in enumerate_words(closure, 3)])

report = is_local_nfa(ab_ba)
print("local?", report.verdict, "witness:", format_word(report.witness))

# Deterministic input has its own product search, no subset construction needed.
print("local (DFA path)?", is_local_dfa(determinize(ab_ba)).verdict)
