"""Language inclusion, universality and equivalence for NFAs.

The main engine is a forward antichain search over pairs ``(q, S)`` where
``q`` is a state of the left operand and ``S`` the set of states the right
operand may be in after the same word. A pair is dropped when a pair
``(q, S')`` with ``S' ⊆ S`` was already seen: whatever rejecting
continuation exists from ``S`` also exists from ``S'``. The search is
breadth-first with initial states and symbols expanded in a fixed order,
so the first counterexample found is a shortest one and the same one on
every run.

``inclusion_oracle`` decides the same question by subset construction,
complementation and an emptiness test; it shares no search code with the
antichain engine and exists to cross-check it.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import (DEFAULT_SUBSET_CAP, Dfa, Nfa, Word, as_nfa, complete,
                       determinize, product_intersection, shortest_word,
                       universal_nfa)
from .errors import InputError, ResourceLimitError
from .report import CheckReport

ENGINES = ("antichain", "determinize-oracle")
DEFAULT_STATE_PAIR_CAP = 2**22


@dataclass(frozen=True)
class InclusionConfig:
    engine: str = "antichain"
    state_pair_cap: int = DEFAULT_STATE_PAIR_CAP
    emit_witness: bool = True

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise InputError(f"unknown inclusion engine {self.engine!r}; expected one of {ENGINES}")
        if self.state_pair_cap <= 0:
            raise InputError("state_pair_cap must be positive")


def inclusion(b, a, cfg: Optional[InclusionConfig] = None) -> CheckReport:
    """Decide whether the language of ``b`` is included in that of ``a``.

    Symbols of ``b`` that ``a`` does not know are allowed; ``a`` simply has
    no run on them.
    """
    cfg = cfg or InclusionConfig()
    b, a = as_nfa(b), as_nfa(a)
    start = time.perf_counter()
    if cfg.engine == "antichain":
        witness, explored = _antichain(b, a, cfg.state_pair_cap)
    else:
        witness, explored = _oracle_counterexample(b, a, min(cfg.state_pair_cap, DEFAULT_SUBSET_CAP))
    verdict = witness is None
    if not cfg.emit_witness:
        witness = None
    return CheckReport(verdict, witness, explored, time.perf_counter() - start)


def _antichain(b: Nfa, a: Nfa, cap: int) -> tuple[Optional[Word], int]:
    a_final = a.final_mask
    b_final = b.final_mask
    b_succ = b.succ
    step_cache: dict[tuple[int, str], int] = {}

    def step(S, sym):
        key = (S, sym)
        r = step_cache.get(key)
        if r is None:
            r = step_cache[key] = a.step(S, sym)
        return r

    antichain: dict[int, list[int]] = {}
    # node = (q, S, parent_index, symbol)
    nodes: list[tuple] = []
    queue: deque[int] = deque()

    def push(q, S, parent, sym) -> bool:
        """Record ``(q, S)`` unless subsumed. Returns True when it is a counterexample."""
        chain = antichain.setdefault(q, [])
        for T in chain:
            if not T & ~S:
                return False
        chain[:] = [T for T in chain if S & ~T]
        chain.append(S)
        if len(nodes) >= cap:
            raise ResourceLimitError(f"inclusion search exceeded the cap of {cap} state pairs")
        nodes.append((q, S, parent, sym))
        queue.append(len(nodes) - 1)
        return bool((b_final >> q) & 1) and not (S & a_final)

    def word_of(i) -> Word:
        out = []
        while i is not None:
            _, _, parent, sym = nodes[i]
            if sym is not None:
                out.append(sym)
            i = parent
        return tuple(reversed(out))

    S0 = a.initial_mask
    for q in sorted(b.initial):
        if push(q, S0, None, None):
            return word_of(len(nodes) - 1), len(nodes)
    while queue:
        i = queue.popleft()
        q, S, _, _ = nodes[i]
        succ = b_succ[q]
        for sym in b.symbols:
            targets = succ.get(sym)
            if not targets:
                continue
            S2 = step(S, sym) if S else 0
            q2 = 0
            while targets:
                if targets & 1 and push(q2, S2, i, sym):
                    return word_of(len(nodes) - 1), len(nodes)
                targets >>= 1
                q2 += 1
    return None, len(nodes)


def _extend(a: Nfa, alphabet) -> Nfa:
    if a.alphabet == alphabet:
        return a
    return Nfa(alphabet, a.state_count, a.initial, a.final, a.transitions)


def _oracle_counterexample(b: Nfa, a: Nfa, subset_cap: int) -> tuple[Optional[Word], int]:
    sigma = a.alphabet | b.alphabet
    d = complete(determinize(_extend(a, sigma), subset_cap))
    co = Dfa(d.alphabet, d.state_count, d.initial,
             [q for q in range(d.state_count) if q not in d.final], d.transitions)
    prod = product_intersection(_extend(b, sigma), co.to_nfa())
    return shortest_word(prod), prod.state_count


def inclusion_oracle(b, a, subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    """Inclusion by determinize, complete, complement, intersect, emptiness."""
    witness, _ = _oracle_counterexample(as_nfa(b), as_nfa(a), subset_cap)
    return witness is None


def universality(a, cfg: Optional[InclusionConfig] = None) -> CheckReport:
    a = as_nfa(a)
    return inclusion(universal_nfa(a.alphabet), a, cfg)


def equivalence(a, b, cfg: Optional[InclusionConfig] = None) -> CheckReport:
    """Language equality; ``a ⊆ b`` is checked first and its witness wins."""
    forward = inclusion(a, b, cfg)
    if not forward.verdict:
        return forward
    backward = inclusion(b, a, cfg)
    return CheckReport(backward.verdict, backward.witness,
                       forward.explored + backward.explored,
                       forward.elapsed + backward.elapsed)
