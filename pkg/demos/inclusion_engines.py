"""
Two ways to decide inclusion
============================

The antichain engine searches pairs (state of B, set of states of A) and
drops any pair whose set contains an already visited one. The reference
engine determinizes A and intersects B with the complement. Both return
a shortest counterexample when inclusion fails.
"""

import random
import time

from locus import InclusionConfig, Nfa, format_word, inclusion, universality
from locus.corpus import random_sparse_nfa

# Σ*bΣ over {a, b}: the second-to-last letter is b.
second_last_b = Nfa("ab", 3, [0], [2], [(0, "a", 0), (0, "b", 0), (0, "b", 1), (1, "a", 2), (1, "b", 2)])
r = universality(second_last_b)
print("universal?", r.verdict, "first missing word:", format_word(r.witness))

rng = random.Random(1)
oracle = InclusionConfig(engine="determinize-oracle")
for trial in range(5):
    b = random_sparse_nfa(rng, 20, 2, out_degree=1.5)
    a = random_sparse_nfa(rng, 20, 2, out_degree=2.5)
    t0 = time.perf_counter()
    fast = inclusion(b, a)
    t1 = time.perf_counter()
    slow = inclusion(b, a, oracle)
    t2 = time.perf_counter()
    witness = format_word(fast.witness) if fast.witness is not None else "-"
    print(f"trial {trial}: included={fast.verdict} witness={witness:<10} "
          f"antichain {fast.explored} pairs {1e3 * (t1 - t0):.1f} ms, "
          f"oracle {slow.explored} {1e3 * (t2 - t1):.1f} ms")
    assert fast.verdict == slow.verdict
