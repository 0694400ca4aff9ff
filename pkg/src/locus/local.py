"""Local languages: specifications, profile extraction, closure, and the locality decisions.

A local language is fixed by its allowed first letters, allowed last
letters, allowed two-letter factors and whether it contains the empty word.
The local closure of a language is the smallest local language containing
it, and a language is local exactly when its closure adds no word.
"""
from __future__ import annotations

import json
import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import (DEFAULT_ENUMERATION_CAP, Dfa, Word, as_nfa, check_symbol,
                       complete, enumerate_words, trim)
from .errors import InputError
from .inclusion import InclusionConfig, inclusion
from .report import CartesianWitness, CheckReport

__all__ = [
    "LocalSpec", "spec_to_dfa", "extract_local_spec", "local_closure",
    "is_local_nfa", "is_local_dfa", "cartesian_oracle", "CartesianWitness", "CheckReport",
]


@dataclass(frozen=True)
class LocalSpec:
    alphabet: frozenset
    first: frozenset
    last: frozenset
    allowed_bigrams: frozenset
    accepts_epsilon: bool = False

    def __post_init__(self):
        for name in ("alphabet", "first", "last"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "allowed_bigrams", frozenset(tuple(p) for p in self.allowed_bigrams))
        for sym in sorted(self.alphabet):
            check_symbol(sym)
        for name in ("first", "last"):
            extra = getattr(self, name) - self.alphabet
            if extra:
                raise InputError(f"{name} letters {sorted(extra)} are not in the alphabet")
        for pair in sorted(self.allowed_bigrams):
            if len(pair) != 2 or not set(pair) <= self.alphabet:
                raise InputError(f"bigram {pair!r} is not a pair of alphabet letters")

    @property
    def forbidden_bigrams(self) -> frozenset:
        return frozenset((x, y) for x in self.alphabet for y in self.alphabet) - self.allowed_bigrams

    def admits(self, w: Word) -> bool:
        """Direct evaluation of the defining condition on a single word."""
        if not w:
            return self.accepts_epsilon
        if w[0] not in self.first or w[-1] not in self.last:
            return False
        return all((x, y) in self.allowed_bigrams for x, y in zip(w, w[1:]))

    def to_json(self) -> str:
        doc = {
            "alphabet": sorted(self.alphabet),
            "first": sorted(self.first),
            "last": sorted(self.last),
            "forbidden_bigrams": [list(p) for p in sorted(self.forbidden_bigrams)],
            "epsilon": self.accepts_epsilon,
        }
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "LocalSpec":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise InputError("local spec must be a JSON object")
        for key, kind in (("alphabet", list), ("first", list), ("last", list),
                          ("forbidden_bigrams", list), ("epsilon", bool)):
            if not isinstance(doc.get(key), kind):
                raise InputError(f"field {key!r} is missing or not a {kind.__name__}")
        alphabet = frozenset(doc["alphabet"])
        for sym in doc["alphabet"]:
            check_symbol(sym)
        forbidden = set()
        for pair in doc["forbidden_bigrams"]:
            if not (isinstance(pair, list) and len(pair) == 2 and set(pair) <= alphabet):
                raise InputError(f"forbidden bigram {pair!r} is not a pair of alphabet letters")
            forbidden.add(tuple(pair))
        allowed = {(x, y) for x in alphabet for y in alphabet} - forbidden
        return cls(alphabet, doc["first"], doc["last"], allowed, doc["epsilon"])


def spec_to_dfa(s: LocalSpec) -> Dfa:
    """The local automaton: one state per letter (the last letter read) plus a start state."""
    letters = sorted(s.alphabet)
    state = {x: i + 1 for i, x in enumerate(letters)}
    delta = {}
    for x in s.first:
        delta[(0, x)] = state[x]
    for x, y in s.allowed_bigrams:
        delta[(state[x], y)] = state[y]
    final = [state[x] for x in s.last]
    if s.accepts_epsilon:
        final.append(0)
    return Dfa(s.alphabet, len(letters) + 1, 0, final, delta)


def extract_local_spec(a) -> LocalSpec:
    """First letters, last letters and two-letter factors of the language of ``a``."""
    a = as_nfa(a)
    eps = bool(a.initial & a.final)
    t = trim(a)
    first = {sym for p, sym, _ in t.transitions if p in t.initial}
    last = {sym for _, sym, q in t.transitions if q in t.final}
    incoming = [set() for _ in range(t.state_count)]
    outgoing = [set() for _ in range(t.state_count)]
    for p, sym, q in t.transitions:
        outgoing[p].add(sym)
        incoming[q].add(sym)
    bigrams = {(x, y) for q in range(t.state_count) for x in incoming[q] for y in outgoing[q]}
    return LocalSpec(a.alphabet, first, last, bigrams, eps)


def local_closure(a) -> Dfa:
    return spec_to_dfa(extract_local_spec(a))


def is_local_nfa(a, cfg: Optional[InclusionConfig] = None) -> CheckReport:
    """Locality of an NFA language: is its local closure included in it?

    A negative verdict carries a word accepted by the closure but not by ``a``.
    """
    a = as_nfa(a)
    start = time.perf_counter()
    closure = local_closure(a)
    r = inclusion(closure.to_nfa(), a, cfg)
    return CheckReport(r.verdict, r.witness, r.explored, time.perf_counter() - start)


def is_local_dfa(d: Dfa) -> CheckReport:
    """Locality of a DFA language by a product search with its closure.

    Runs in polynomial time and never builds subsets.
    """
    start = time.perf_counter()
    closure = local_closure(d.to_nfa())
    c = complete(d)
    origin = {(closure.initial, c.initial): None}
    queue = deque([(closure.initial, c.initial)])
    found = None
    while queue:
        pair = queue.popleft()
        p, q = pair
        if p in closure.final and q not in c.final:
            found = pair
            break
        for sym in closure.symbols:
            p2 = closure.transitions.get((p, sym))
            if p2 is None:
                continue
            nxt = (p2, c.transitions[(q, sym)])
            if nxt not in origin:
                origin[nxt] = (pair, sym)
                queue.append(nxt)
    elapsed = time.perf_counter() - start
    if found is None:
        return CheckReport(True, None, len(origin), elapsed)
    word = []
    while origin[found] is not None:
        found, sym = origin[found]
        word.append(sym)
    return CheckReport(False, tuple(reversed(word)), len(origin), elapsed)


def cartesian_oracle(a, max_len: int = 8,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> Optional[CartesianWitness]:
    """Exhaustive search for a letter-Cartesian violation among words of length ≤ ``max_len``.

    Pairs ``(w1, w2)`` of accepted words are scanned in enumeration order,
    then positions in ``w1``, then in ``w2``; the first pivot whose crossed
    word is rejected is returned. ``None`` only means no violation exists
    within the bound. The crossed word itself is checked without a bound.
    """
    a = as_nfa(a)
    words = enumerate_words(a, max_len, cap)
    if not words:
        return None
    final = a.final_mask
    step_cache: dict = {}

    def step(S, sym):
        r = step_cache.get((S, sym))
        if r is None:
            r = step_cache[(S, sym)] = a.step(S, sym)
        return r

    def run(S, w):
        for sym in w:
            if not S:
                return 0
            S = step(S, sym)
        return S

    # Suffix tries: for each pivot letter, every delta following it in some word.
    tries: dict[str, list] = {}
    for w in words:
        for j, x in enumerate(w):
            nodes = tries.setdefault(x, [[{}, False]])
            node = 0
            for sym in w[j + 1:]:
                child = nodes[node][0].get(sym)
                if child is None:
                    child = nodes[node][0][sym] = len(nodes)
                    nodes.append([{}, False])
                node = child
            nodes[node][1] = True

    bad_cache: dict = {}

    def has_rejected_suffix(S, x) -> bool:
        key = (S, x)
        if key in bad_cache:
            return bad_cache[key]
        nodes = tries[x]
        seen = {(0, S)}
        stack = [(0, S)]
        result = False
        while stack and not result:
            node, T = stack.pop()
            children, terminal = nodes[node]
            if terminal and not T & final:
                result = True
                break
            for sym, child in children.items():
                T2 = step(T, sym) if T else 0
                if not T2:
                    # every trie subtree ends in a terminal node
                    result = True
                    break
                if (child, T2) not in seen:
                    seen.add((child, T2))
                    stack.append((child, T2))
        bad_cache[key] = result
        return result

    for w1 in words:
        prefixes = []
        S = a.initial_mask
        for x in w1:
            S = step(S, x)
            prefixes.append(S)
        if not any(has_rejected_suffix(S, x) for S, x in zip(prefixes, w1)):
            continue
        for w2 in words:
            for i, x in enumerate(w1):
                for j, y in enumerate(w2):
                    if y == x and not run(prefixes[i], w2[j + 1:]) & final:
                        return CartesianWitness(x, w1[:i], w1[i + 1:], w2[:j], w2[j + 1:])
        raise AssertionError("suffix search and pair scan disagree")  # pragma: no cover
    return None
