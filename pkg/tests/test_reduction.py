import pytest
from hypothesis import given, settings

from conftest import nfas, seeded_nfas
from locus import (Nfa, PreconditionError, accepts, enumerate_words, greibach_gadget,
                   is_empty, is_infix_free, is_local_nfa, universality, verify_reduction)
from locus.corpus import nfa_corpus
from locus.reduction import fresh_symbols
from oracles import all_words, gadget_member, naive_accepts, strict_infix_violation


def test_gadget_of_universal_seed(b_star):
    g = greibach_gadget(b_star)
    assert g.fresh_symbols.as_dict() == {"a": "a", "h1": "#1", "h2": "#2", "h3": "#3"}
    assert g.automaton.alphabet == {"a", "b", "#1", "#2", "#3"}
    assert g.automaton.state_count == b_star.state_count + 7
    assert is_local_nfa(g.automaton).verdict
    # #1 a* #2 b* #3, checked word by word.
    for w in all_words(g.automaton.alphabet, 5):
        expected = (len(w) >= 3 and w[0] == "#1" and w[-1] == "#3" and "#2" in w[1:-1]
                    and set(w[1:w.index("#2")]) <= {"a"} and set(w[w.index("#2") + 1:-1]) <= {"b"})
        assert accepts(g.automaton, w) == expected, w


def test_gadget_of_single_word_seed(just_b):
    g = greibach_gadget(just_b).automaton
    assert not is_local_nfa(g).verdict
    # The three words of the non-locality argument, with u = b and w = ε.
    assert accepts(g, ("#1", "#2", "b", "#3"))
    assert accepts(g, ("#1", "a", "a", "#2", "#3"))
    assert not accepts(g, ("#1", "#2", "#3"))


def test_gadget_rejects_empty_seed():
    with pytest.raises(PreconditionError, match="empty seed"):
        greibach_gadget(Nfa("b", 1, [0], [], [(0, "b", 0)]))


def test_fresh_symbols_avoid_seed_tokens():
    fs = fresh_symbols({"a", "#2", "a_g1"})
    assert fs.as_dict() == {"a": "a_g2", "h1": "#1", "h2": "#2_g1", "h3": "#3"}


def test_gadget_with_colliding_alphabet():
    seed = Nfa(["a", "b"], 1, [0], [0], [(0, "a", 0), (0, "b", 0)])
    g = greibach_gadget(seed)
    assert g.fresh_symbols.a == "a_g1"
    assert g.seed_alphabet == {"a", "b"}
    assert g.automaton.alphabet == {"a", "b", "a_g1", "#1", "#2", "#3"}
    assert is_local_nfa(g.automaton).verdict


def test_infix_free_gadget(b_star, just_b, ab_ba):
    for seed in (b_star, just_b, ab_ba):
        assert is_infix_free(greibach_gadget(seed).automaton).verdict


def test_infix_free_a_aa():
    a = Nfa("a", 3, [0], [1, 2], [(0, "a", 1), (1, "a", 2)])
    r = is_infix_free(a)
    assert strict_infix_violation(enumerate_words(a, 4)) == ("a",)
    assert (r.verdict, r.witness) == (False, ("a",))


def test_infix_free_ab_ba(ab_ba):
    assert strict_infix_violation(enumerate_words(ab_ba, 4)) is None
    assert is_infix_free(ab_ba).verdict


def test_infix_free_epsilon_is_infix_of_everything():
    a = Nfa("a", 2, [0], [0, 1], [(0, "a", 1)])
    r = is_infix_free(a)
    assert (r.verdict, r.witness) == (False, ())


def test_infix_free_only_epsilon():
    assert is_infix_free(Nfa("a", 1, [0], [0], [])).verdict


def test_verify_reduction_examples(b_star, just_b):
    r = verify_reduction(b_star)
    assert (r.universal, r.gadget_local, r.gadget_infix_free, r.consistent) == (True, True, True, True)
    r = verify_reduction(just_b)
    assert (r.universal, r.gadget_local, r.gadget_infix_free, r.consistent) == (False, False, True, True)


def test_verify_reduction_seed_with_epsilon_only_missing():
    # L = b+ : every word but ε, so the missing word is w = ε.
    seed = Nfa("b", 2, [0], [1], [(0, "b", 1), (1, "b", 1)])
    r = verify_reduction(seed)
    assert not r.universal and not r.gadget_local and r.consistent


@settings(max_examples=60, deadline=None)
@given(nfas(max_states=3, max_alphabet=1))
def test_gadget_language_matches_brute_force(seed):
    if is_empty(seed):
        return
    g = greibach_gadget(seed)
    fs = g.fresh_symbols
    fresh = (fs.a, fs.h1, fs.h2, fs.h3)
    expected = [w for w in all_words(g.automaton.alphabet, 6)
                if gadget_member(w, seed, fresh, seed.alphabet)]
    assert enumerate_words(g.automaton, 6) == expected


@settings(max_examples=200, deadline=None)
@given(nfas(max_states=3))
def test_infix_free_agrees_with_scan(a):
    r = is_infix_free(a)
    violation = strict_infix_violation(enumerate_words(a, 7))
    if violation is not None:
        assert not r.verdict
    if not r.verdict:
        w = r.witness
        assert naive_accepts(a, w)
        # w occurs strictly inside some accepted word; with 3 states the
        # skipped prefix and suffix each need at most 3 letters.
        longer = [v for v in enumerate_words(a, len(w) + 6) if len(v) > len(w)
                  and any(v[i:i + len(w)] == w for i in range(len(v) - len(w) + 1))]
        assert longer


@settings(max_examples=200, deadline=None)
@given(seeded_nfas())
def test_reduction_theorem(seed):
    if is_empty(seed):
        return
    g = greibach_gadget(seed).automaton
    assert g.state_count == seed.state_count + 7
    r = verify_reduction(seed)
    assert r.universal == universality(seed).verdict
    assert r.consistent


def test_infix_free_on_corpus():
    for i, a in enumerate(nfa_corpus(200, seed=5)):
        violation = strict_infix_violation(enumerate_words(a, 8))
        r = is_infix_free(a)
        if violation is not None:
            assert not r.verdict, f"#{i}"
            # The engine's witness is a shortest offending word.
            assert len(r.witness) == len(violation), f"#{i}"
