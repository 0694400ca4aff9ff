"""Brute-force reference procedures for the tests.

Nothing here uses bitmasks, subset construction, or the search code under
test; everything is word-by-word and path-by-path.
"""
import itertools


def all_words(alphabet, max_len):
    syms = sorted(alphabet)
    for n in range(max_len + 1):
        for w in itertools.product(syms, repeat=n):
            yield w


def naive_accepts(a, w):
    """Depth-first search for an accepting path labelled ``w``."""
    edges = {}
    for p, s, q in a.transitions:
        edges.setdefault((p, s), []).append(q)

    def go(state, i):
        if i == len(w):
            return state in a.final
        return any(go(q, i + 1) for q in edges.get((state, w[i]), ()))

    return any(go(q, 0) for q in a.initial)


def naive_dfa_accepts(d, w):
    if not d.state_count:
        return False
    q = d.initial
    for s in w:
        if (q, s) not in d.transitions:
            return False
        q = d.transitions[(q, s)]
    return q in d.final


def naive_language(a, max_len, alphabet=None):
    """Accepted words up to ``max_len`` by exhaustive filtering, in length-lex order."""
    alphabet = a.alphabet if alphabet is None else alphabet
    accept = naive_dfa_accepts if hasattr(a, "is_total") else naive_accepts
    return [w for w in all_words(alphabet, max_len) if accept(a, w)]


def profile(words):
    """First letters, last letters and two-letter factors of a finite word set."""
    first = {w[0] for w in words if w}
    last = {w[-1] for w in words if w}
    bigrams = {(w[i], w[i + 1]) for w in words for i in range(len(w) - 1)}
    return first, last, bigrams


def local_formula(w, first, last, forbidden, epsilon):
    """Membership in (first·Σ* ∩ Σ*·last) minus Σ*·forbidden·Σ*, plus ε by flag."""
    if not w:
        return epsilon
    if w[0] not in first or w[-1] not in last:
        return False
    return not any((w[i], w[i + 1]) in forbidden for i in range(len(w) - 1))


def naive_cartesian(a, max_len):
    """The quadruple loop over word pairs and pivot positions, unoptimised."""
    words = naive_language(a, max_len)
    for w1 in words:
        for w2 in words:
            for i in range(len(w1)):
                for j in range(len(w2)):
                    if w1[i] != w2[j]:
                        continue
                    if not naive_accepts(a, w1[:i + 1] + w2[j + 1:]):
                        return (w1[i], w1[:i], w1[i + 1:], w2[:j], w2[j + 1:])
    return None


def strict_infix_violation(words):
    """The length-lex least word of the set that is a strict infix of another word of the set."""
    ws = set(words)
    infixes = set()
    for v in ws:
        for i in range(len(v) + 1):
            for j in range(i, len(v) + 1):
                if j - i < len(v):
                    infixes.add(v[i:j])
    hits = sorted(ws & infixes, key=lambda x: (len(x), x))
    return hits[0] if hits else None


def gadget_member(w, seed, fresh, seed_alphabet):
    """Does ``w`` match #1 (a* #2 L + aa #2 Σ*) #3, with L decided by ``seed``?"""
    a, h1, h2, h3 = fresh
    if len(w) < 3 or w[0] != h1 or w[-1] != h3:
        return False
    mid = w[1:-1]
    if h2 not in mid:
        return False
    k = mid.index(h2)
    prefix, rest = mid[:k], mid[k + 1:]
    if any(s != a for s in prefix) or any(s not in seed_alphabet for s in rest):
        return False
    return naive_accepts(seed, rest) or len(prefix) == 2


def shortest_difference_length(b, a, alphabet, bound):
    """Length of a shortest word in L(b) minus L(a), or None if none has length <= bound.

    Words are extended one letter at a time. Two words reaching the same pair
    of state sets have the same futures, so only the first of them is kept.
    """
    def step(edges, states, s):
        return frozenset(q for p, sym, q in edges if p in states and sym == s)

    start = (frozenset(b.initial), frozenset(a.initial))
    seen = {start}
    level = [start]
    for n in range(bound + 1):
        if any(sb & set(b.final) and not sa & set(a.final) for sb, sa in level):
            return n
        nxt = []
        for sb, sa in level:
            for s in sorted(alphabet):
                pair = (step(b.transitions, sb, s), step(a.transitions, sa, s))
                if pair[0] and pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        level = nxt
    return None
