"""Hard instances for locality testing, built from NFA universality.

From a seed automaton for ``L`` over ``Σ`` the gadget builds an automaton for

    #1 (a* #2 L  +  a a #2 Σ*) #3

over ``Σ`` plus four fresh letters. The gadget language is always
infix-free, and it is local exactly when ``L = Σ*``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .automata import (Nfa, as_nfa, coreachable_mask, is_empty, mask_of,
                       product_intersection, shortest_word, states_of)
from .errors import PreconditionError
from .inclusion import InclusionConfig, universality
from .local import is_local_nfa
from .report import CheckReport

DEFAULT_FRESH = {"a": "a", "h1": "#1", "h2": "#2", "h3": "#3"}


@dataclass(frozen=True)
class FreshSymbols:
    a: str
    h1: str
    h2: str
    h3: str

    def as_dict(self) -> dict:
        return {"a": self.a, "h1": self.h1, "h2": self.h2, "h3": self.h3}


@dataclass(frozen=True)
class GadgetOutput:
    automaton: Nfa
    fresh_symbols: FreshSymbols
    seed_alphabet: frozenset


@dataclass(frozen=True)
class ReductionCheck:
    universal: bool
    gadget_local: bool
    gadget_infix_free: bool
    consistent: bool


def fresh_symbols(seed_alphabet) -> FreshSymbols:
    taken = set(seed_alphabet)
    chosen = {}
    for role, token in DEFAULT_FRESH.items():
        candidate, k = token, 0
        while candidate in taken:
            k += 1
            candidate = f"{token}_g{k}"
        taken.add(candidate)
        chosen[role] = candidate
    return FreshSymbols(**chosen)


def greibach_gadget(a) -> GadgetOutput:
    """Build the gadget automaton; seed states keep their ids, seven states are appended."""
    a = as_nfa(a)
    if is_empty(a):
        raise PreconditionError("reduction invalid on empty seed: the seed language must be nonempty")
    fs = fresh_symbols(a.alphabet)
    n = a.state_count
    start, loop, u1, u2, u3, u4, accept = range(n, n + 7)
    trans = [(p, s, q) for p, s, q in a.transitions]
    trans += [(start, fs.h1, loop), (loop, fs.a, loop)]
    trans += [(loop, fs.h2, q) for q in a.initial]
    trans += [(q, fs.h3, accept) for q in a.final]
    trans += [(start, fs.h1, u1), (u1, fs.a, u2), (u2, fs.a, u3), (u3, fs.h2, u4),
              (u4, fs.h3, accept)]
    trans += [(u4, s, u4) for s in a.alphabet]
    alphabet = a.alphabet | set(fs.as_dict().values())
    nfa = Nfa(alphabet, n + 7, [start], [accept], trans)
    return GadgetOutput(nfa, fs, a.alphabet)


def strict_infix_nfa(a: Nfa) -> Nfa:
    """Automaton for the strict infixes of words of ``a``.

    State ``q + n * moved`` means "in state ``q`` of ``a``", with ``moved``
    recording whether a nonempty prefix or suffix has been skipped. Skipped
    prefixes are folded into the initial set, skipped suffixes into the
    final set.
    """
    n = a.state_count
    after_step = _closure(a.succ, mask_of(q for p in a.initial for m in a.succ[p].values()
                                          for q in states_of(m)))
    before_step = _closure(a.pred, mask_of(p for q in a.final for m in a.pred[q].values()
                                           for p in states_of(m)))
    co = coreachable_mask(a)
    initial = list(a.initial) + [q + n for q in states_of(after_step)]
    final = [q + n for q in states_of(co)] + states_of(before_step)
    trans = [(p + n * f, s, q + n * f) for p, s, q in a.transitions for f in (0, 1)]
    return Nfa(a.alphabet, 2 * n, initial, final, trans)


def _closure(edges: list[dict], mask: int) -> int:
    """States reachable from ``mask`` along ``edges`` (zero or more steps)."""
    seen = mask
    todo = states_of(mask)
    while todo:
        q = todo.pop()
        for m in edges[q].values():
            new = m & ~seen
            if new:
                seen |= new
                todo.extend(states_of(new))
    return seen


def is_infix_free(a) -> CheckReport:
    """No accepted word is a strict infix of another accepted word.

    On failure the witness is an accepted word that is also a strict infix
    of some accepted word.
    """
    a = as_nfa(a)
    start = time.perf_counter()
    prod = product_intersection(a, strict_infix_nfa(a))
    witness = shortest_word(prod)
    return CheckReport(witness is None, witness, prod.state_count, time.perf_counter() - start)


def verify_reduction(a, cfg: InclusionConfig | None = None) -> ReductionCheck:
    a = as_nfa(a)
    gadget = greibach_gadget(a).automaton
    universal = universality(a, cfg).verdict
    local = is_local_nfa(gadget, cfg).verdict
    infix_free = is_infix_free(gadget).verdict
    return ReductionCheck(universal, local, infix_free, universal == local and infix_free)
