"""Seeded random generators for automata, local specs and regexes."""
from __future__ import annotations

import random
from typing import Optional

from .automata import Nfa, is_empty
from .local import LocalSpec
from .regex import Concat, Empty, Epsilon, Literal, Star, Union

LETTERS = ("a", "b", "c", "d")


def random_nfa(rng: random.Random, max_states: int = 6, max_alphabet: int = 3,
               density: Optional[float] = None) -> Nfa:
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_alphabet)
    alphabet = LETTERS[:k]
    if density is None:
        density = rng.uniform(0.05, 0.9)
    trans = [(p, s, q) for p in range(n) for s in alphabet for q in range(n)
             if rng.random() < density]
    initial = [q for q in range(n) if rng.random() < 0.35] or [rng.randrange(n)]
    final = [q for q in range(n) if rng.random() < 0.45]
    return Nfa(alphabet, n, initial, final, trans)


def nfa_corpus(size: int, seed: int = 0, nonempty: bool = True, **kwargs) -> list[Nfa]:
    """``size`` random NFAs, by default restricted to nonempty languages."""
    rng = random.Random(seed)
    out = []
    while len(out) < size:
        a = random_nfa(rng, **kwargs)
        if nonempty and is_empty(a):
            continue
        out.append(a)
    return out


def random_sparse_nfa(rng: random.Random, states: int, alphabet_size: int,
                      out_degree: float = 1.5) -> Nfa:
    """Larger automata with a fixed expected number of successors per (state, symbol)."""
    alphabet = LETTERS[:alphabet_size] if alphabet_size <= len(LETTERS) else \
        tuple(f"s{i}" for i in range(alphabet_size))
    p = min(1.0, out_degree / states)
    trans = [(src, s, dst) for src in range(states) for s in alphabet for dst in range(states)
             if rng.random() < p]
    initial = [0]
    final = [q for q in range(states) if rng.random() < 0.3] or [states - 1]
    return Nfa(alphabet, states, initial, final, trans)


def random_spec(rng: random.Random, max_alphabet: int = 3) -> LocalSpec:
    alphabet = LETTERS[:rng.randint(1, max_alphabet)]

    def pick(xs, p):
        return {x for x in xs if rng.random() < p}

    p = rng.random()
    pairs = [(x, y) for x in alphabet for y in alphabet]
    return LocalSpec(alphabet, pick(alphabet, p), pick(alphabet, rng.random()),
                     pick(pairs, rng.random()), rng.random() < 0.5)


def random_regex(rng: random.Random, depth: int = 5, alphabet=("a", "b", "c")):
    """Random syntax tree of the given maximum depth; leaves are mostly literals."""
    if depth <= 1 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.06:
            return Empty()
        if r < 0.14:
            return Epsilon()
        return Literal(rng.choice(alphabet))
    kind = rng.random()
    if kind < 0.4:
        return Concat(random_regex(rng, depth - 1, alphabet), random_regex(rng, depth - 1, alphabet))
    if kind < 0.75:
        return Union(random_regex(rng, depth - 1, alphabet), random_regex(rng, depth - 1, alphabet))
    return Star(random_regex(rng, depth - 1, alphabet))


def regex_corpus(size: int, seed: int = 0, depth: int = 5) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        alphabet = LETTERS[:rng.randint(1, 3)]
        out.append(random_regex(rng, depth, alphabet))
    return out
