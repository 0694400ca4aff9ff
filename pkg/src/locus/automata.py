"""Core automaton types and the standard constructions built on them.

States are dense integer ids ``0 .. state_count - 1``. Symbols are printable
string tokens; a word is a tuple of tokens, ``()`` being the empty word.
Sets of NFA states are handled internally as integer bitmasks.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, ResourceLimitError

Symbol = str
Word = tuple  # tuple[Symbol, ...]

DEFAULT_SUBSET_CAP = 2**20
DEFAULT_ENUMERATION_CAP = 10**6


def check_symbol(sym) -> None:
    if not isinstance(sym, str) or not sym or any(c.isspace() for c in sym):
        raise InputError(f"invalid symbol token {sym!r}: must be a nonempty string without whitespace")


def as_word(w: Iterable[Symbol]) -> Word:
    # A bare string is read as a sequence of single-character tokens.
    return tuple(w)


def format_word(w: Sequence[Symbol]) -> str:
    """Human rendering: tokens separated by spaces, ``ε`` for the empty word."""
    return " ".join(w) if w else "ε"


def mask_of(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def states_of(mask: int) -> list[int]:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return out


@dataclass(frozen=True)
class Nfa:
    """An ε-free nondeterministic finite automaton."""

    alphabet: frozenset
    state_count: int
    initial: frozenset
    final: frozenset
    transitions: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "alphabet", frozenset(self.alphabet))
        set_(self, "initial", frozenset(self.initial))
        set_(self, "final", frozenset(self.final))
        set_(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        for sym in sorted(self.alphabet):
            check_symbol(sym)
        n = self.state_count
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InputError(f"state count must be a nonnegative integer, got {n!r}")
        for kind, qs in (("initial", self.initial), ("final", self.final)):
            for q in sorted(qs):
                if not _valid_state(q, n):
                    raise InputError(f"{kind} state {q!r} out of range for {n} states")
        for t in sorted(self.transitions, key=repr):
            if len(t) != 3:
                raise InputError(f"transition {t!r} is not a (source, symbol, target) triple")
            p, sym, q = t
            if not _valid_state(p, n) or not _valid_state(q, n):
                raise InputError(f"transition {t!r} references a state out of range for {n} states")
            if sym not in self.alphabet:
                raise InputError(f"transition {t!r} uses symbol {sym!r} not in the alphabet")

    @cached_property
    def symbols(self) -> tuple:
        """Alphabet in the fixed total order used for enumeration and tie-breaking."""
        return tuple(sorted(self.alphabet))

    @cached_property
    def succ(self) -> list[dict]:
        """``succ[p][sym]`` is the bitmask of targets of ``p`` on ``sym``."""
        table = [dict() for _ in range(self.state_count)]
        for p, sym, q in self.transitions:
            table[p][sym] = table[p].get(sym, 0) | (1 << q)
        return table

    @cached_property
    def pred(self) -> list[dict]:
        table = [dict() for _ in range(self.state_count)]
        for p, sym, q in self.transitions:
            table[q][sym] = table[q].get(sym, 0) | (1 << p)
        return table

    @cached_property
    def initial_mask(self) -> int:
        return mask_of(self.initial)

    @cached_property
    def final_mask(self) -> int:
        return mask_of(self.final)

    def step(self, mask: int, sym: Symbol) -> int:
        out = 0
        succ = self.succ
        q = 0
        while mask:
            if mask & 1:
                out |= succ[q].get(sym, 0)
            mask >>= 1
            q += 1
        return out

    def run(self, w: Iterable[Symbol], mask: int | None = None) -> int:
        """Set of states reached from ``mask`` (default: initial states) after reading ``w``."""
        m = self.initial_mask if mask is None else mask
        for sym in w:
            if not m:
                break
            m = self.step(m, sym)
        return m

    def __repr__(self):
        return (f"Nfa(alphabet={sorted(self.alphabet)}, state_count={self.state_count}, "
                f"initial={sorted(self.initial)}, final={sorted(self.final)}, "
                f"transitions={len(self.transitions)})")


@dataclass(frozen=True, eq=False)
class Dfa:
    """A deterministic, possibly partial, automaton.

    A missing entry in ``transitions`` sends the run to an implicit
    rejecting sink.
    """

    alphabet: frozenset
    state_count: int
    initial: int
    final: frozenset
    transitions: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "final", frozenset(self.final))
        n = self.state_count
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise InputError(f"state count must be a nonnegative integer, got {n!r}")
        for sym in sorted(self.alphabet):
            check_symbol(sym)
        if n == 0:
            if self.final or self.transitions:
                raise InputError("a zero-state DFA cannot have final states or transitions")
        elif not _valid_state(self.initial, n):
            raise InputError(f"initial state {self.initial!r} out of range for {n} states")
        for q in sorted(self.final):
            if not _valid_state(q, n):
                raise InputError(f"final state {q!r} out of range for {n} states")
        delta = {}
        for key, q in dict(self.transitions).items():
            p, sym = key
            if not _valid_state(p, n) or not _valid_state(q, n):
                raise InputError(f"transition {(p, sym, q)!r} references a state out of range for {n} states")
            if sym not in self.alphabet:
                raise InputError(f"transition {(p, sym, q)!r} uses symbol {sym!r} not in the alphabet")
            delta[(p, sym)] = q
        object.__setattr__(self, "transitions", delta)

    @classmethod
    def from_triples(cls, alphabet, state_count, initial, final, triples) -> "Dfa":
        delta = {}
        for p, sym, q in triples:
            if (p, sym) in delta and delta[(p, sym)] != q:
                raise InputError(f"state {p} has two targets on symbol {sym!r}: not deterministic")
            delta[(p, sym)] = q
        return cls(alphabet, state_count, initial, final, delta)

    @cached_property
    def symbols(self) -> tuple:
        return tuple(sorted(self.alphabet))

    @property
    def is_total(self) -> bool:
        return len(self.transitions) == self.state_count * len(self.alphabet)

    def triples(self) -> list[tuple]:
        return sorted((p, sym, q) for (p, sym), q in self.transitions.items())

    def to_nfa(self) -> Nfa:
        initial = [self.initial] if self.state_count else []
        return Nfa(self.alphabet, self.state_count, initial, self.final, self.triples())

    def accepts(self, w: Iterable[Symbol]) -> bool:
        w = as_word(w)
        _check_word(self.alphabet, w)
        if not self.state_count:
            return False
        q = self.initial
        for sym in w:
            q = self.transitions.get((q, sym))
            if q is None:
                return False
        return q in self.final

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.state_count == other.state_count
                and self.initial == other.initial and self.final == other.final
                and self.transitions == other.transitions)

    __hash__ = None

    def __repr__(self):
        return (f"Dfa(alphabet={sorted(self.alphabet)}, state_count={self.state_count}, "
                f"initial={self.initial}, final={sorted(self.final)}, "
                f"transitions={len(self.transitions)})")


def _valid_state(q, n: int) -> bool:
    return isinstance(q, int) and not isinstance(q, bool) and 0 <= q < n


def _check_word(alphabet, w: Sequence[Symbol]) -> None:
    for sym in w:
        if sym not in alphabet:
            raise InputError(f"symbol {sym!r} is not in the alphabet {sorted(alphabet)}")


def as_nfa(a) -> Nfa:
    return a.to_nfa() if isinstance(a, Dfa) else a


def accepts(a, w: Iterable[Symbol]) -> bool:
    """Membership test by forward simulation of the set of current states."""
    if isinstance(a, Dfa):
        return a.accepts(w)
    w = as_word(w)
    _check_word(a.alphabet, w)
    return bool(a.run(w) & a.final_mask)


def reachable_mask(a: Nfa) -> int:
    seen = a.initial_mask
    todo = list(a.initial)
    while todo:
        p = todo.pop()
        for m in a.succ[p].values():
            new = m & ~seen
            if new:
                seen |= new
                todo.extend(states_of(new))
    return seen


def coreachable_mask(a: Nfa) -> int:
    seen = a.final_mask
    todo = list(a.final)
    while todo:
        q = todo.pop()
        for m in a.pred[q].values():
            new = m & ~seen
            if new:
                seen |= new
                todo.extend(states_of(new))
    return seen


def trim(a: Nfa) -> Nfa:
    """Keep only states that are reachable and co-reachable."""
    keep = states_of(reachable_mask(a) & coreachable_mask(a))
    if len(keep) == a.state_count:
        return a
    rename = {old: new for new, old in enumerate(keep)}
    return Nfa(
        a.alphabet,
        len(keep),
        [rename[q] for q in a.initial if q in rename],
        [rename[q] for q in a.final if q in rename],
        [(rename[p], s, rename[q]) for p, s, q in a.transitions if p in rename and q in rename],
    )


def is_empty(a: Nfa) -> bool:
    return not (reachable_mask(a) & a.final_mask)


def product_intersection(a: Nfa, b: Nfa) -> Nfa:
    """Synchronous product over the reachable pairs only."""
    if a.alphabet != b.alphabet:
        raise InputError(
            f"alphabet mismatch: {sorted(a.alphabet)} vs {sorted(b.alphabet)}")
    index: dict[tuple, int] = {}
    queue = deque()
    for p in sorted(a.initial):
        for q in sorted(b.initial):
            index[(p, q)] = len(index)
            queue.append((p, q))
    initial = list(range(len(index)))
    trans = []
    while queue:
        p, q = queue.popleft()
        src = index[(p, q)]
        for sym in a.symbols:
            ta = a.succ[p].get(sym, 0)
            tb = b.succ[q].get(sym, 0)
            if not ta or not tb:
                continue
            for p2 in states_of(ta):
                for q2 in states_of(tb):
                    if (p2, q2) not in index:
                        index[(p2, q2)] = len(index)
                        queue.append((p2, q2))
                    trans.append((src, sym, index[(p2, q2)]))
    final = [i for (p, q), i in index.items() if p in a.final and q in b.final]
    return Nfa(a.alphabet, len(index), initial, final, trans)


def determinize(a: Nfa, subset_cap: int = DEFAULT_SUBSET_CAP) -> Dfa:
    """Subset construction over the reachable nonempty subsets.

    The empty subset is never materialised; the result is partial instead.
    """
    start = a.initial_mask
    index = {start: 0}
    order = [start]
    delta = {}
    i = 0
    while i < len(order):
        m = order[i]
        for sym in a.symbols:
            m2 = a.step(m, sym)
            if not m2:
                continue
            j = index.get(m2)
            if j is None:
                if len(order) >= subset_cap:
                    raise ResourceLimitError(
                        f"subset construction exceeded the cap of {subset_cap} subsets")
                j = index[m2] = len(order)
                order.append(m2)
            delta[(i, sym)] = j
        i += 1
    final = [k for k, m in enumerate(order) if m & a.final_mask]
    return Dfa(a.alphabet, len(order), 0, final, delta)


def complete(d: Dfa) -> Dfa:
    """Make the transition function total, adding one sink state if needed."""
    if d.is_total and d.state_count:
        return d
    if not d.state_count:
        delta = {(0, s): 0 for s in d.alphabet}
        return Dfa(d.alphabet, 1, 0, (), delta)
    sink = d.state_count
    delta = dict(d.transitions)
    for p in range(d.state_count + 1):
        for s in d.symbols:
            delta.setdefault((p, s), sink)
    return Dfa(d.alphabet, d.state_count + 1, d.initial, d.final, delta)


def enumerate_words(a, max_len: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Word]:
    """All accepted words of length at most ``max_len``, shortest first, then lexicographic.

    Raises ResourceLimitError if more than ``cap`` words (or live prefixes of
    one length) would be produced.
    """
    if max_len < 0:
        raise InputError("max_len must be nonnegative")
    t = trim(as_nfa(a))
    if not t.state_count:
        return []
    out = []
    level = [((), t.initial_mask)]
    for length in range(max_len + 1):
        for w, m in level:
            if m & t.final_mask:
                out.append(w)
        if len(out) > cap:
            raise ResourceLimitError(f"enumeration exceeded the cap of {cap} words")
        if length == max_len:
            break
        nxt = []
        for w, m in level:
            for sym in t.symbols:
                m2 = t.step(m, sym)
                if m2:
                    nxt.append((w + (sym,), m2))
        if len(nxt) > cap:
            raise ResourceLimitError(f"enumeration exceeded the cap of {cap} live prefixes")
        level = nxt
        if not level:
            break
    return out


def universal_nfa(alphabet: Iterable[Symbol]) -> Nfa:
    """One accepting state with a loop on every symbol."""
    alphabet = frozenset(alphabet)
    return Nfa(alphabet, 1, [0], [0], [(0, s, 0) for s in alphabet])


def empty_nfa(alphabet: Iterable[Symbol]) -> Nfa:
    return Nfa(frozenset(alphabet), 0, (), (), ())


def words_up_to(alphabet: Iterable[Symbol], max_len: int):
    """Every word over ``alphabet`` of length at most ``max_len``, in enumeration order."""
    syms = sorted(alphabet)
    level = [()]
    for length in range(max_len + 1):
        yield from level
        if length < max_len:
            level = [w + (s,) for w in level for s in syms]


def shortest_word(n: Nfa) -> Optional[Word]:
    """A shortest accepted word, or None.

    Breadth-first search over single states; suited to automata whose states
    already encode everything, such as products with a DFA.
    """
    parent: dict[int, tuple] = {}
    queue = deque()
    for q in sorted(n.initial):
        parent[q] = (None, None)
        queue.append(q)
    while queue:
        p = queue.popleft()
        if p in n.final:
            out = []
            while parent[p][0] is not None:
                p, sym = parent[p]
                out.append(sym)
            return tuple(reversed(out))
        for sym in n.symbols:
            targets = n.succ[p].get(sym, 0)
            q = 0
            while targets:
                if targets & 1 and q not in parent:
                    parent[q] = (p, sym)
                    queue.append(q)
                targets >>= 1
                q += 1
    return None
