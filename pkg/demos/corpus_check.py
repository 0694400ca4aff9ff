"""
Checking the reduction on random seeds
======================================

Build a few hundred small random NFAs, wrap each in the gadget, and confirm
the gadget is local exactly for the universal seeds. The same check is
available from the shell as ``locus verify-reduction --corpus DIR``.
"""

import collections
import time

from locus import verify_reduction
from locus.corpus import nfa_corpus

seeds = nfa_corpus(300, seed=11)
t0 = time.perf_counter()
tally = collections.Counter()
for a in seeds:
    r = verify_reduction(a)
    tally["universal" if r.universal else "not universal"] += 1
    tally["consistent"] += r.consistent
print(dict(tally), f"in {time.perf_counter() - t0:.2f}s")

# States versus universality, as a tiny table.
by_size = collections.defaultdict(lambda: [0, 0])
for a in seeds:
    by_size[a.state_count][0] += 1
    by_size[a.state_count][1] += verify_reduction(a).universal
for n in sorted(by_size):
    total, universal = by_size[n]
    print(f"{n} states: {universal:3d}/{total:3d} universal")
