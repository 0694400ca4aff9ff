import random

import pytest
from hypothesis import given, settings

from conftest import FIXTURES, nfas
from locus import (Dfa, InputError, Nfa, determinize, greibach_gadget, local_closure,
                   marked_automaton, parse_regex)
from locus.corpus import nfa_corpus, random_regex
from locus.dot import to_dot
from locus.io import dumps_automaton, loads_automaton, read_automaton, write_automaton

EXAMPLE = ('{"alphabet": ["a","b"], "states": 3, "initial": [0], "final": [2], '
           '"transitions": [[0,"a",1],[1,"b",2]]}')


def test_writer_is_bit_exact():
    a = Nfa("ab", 3, [0], [2], [(1, "b", 2), (0, "a", 1)])
    assert dumps_automaton(a) == EXAMPLE
    assert loads_automaton(EXAMPLE) == a


def test_writer_sorts_transitions():
    a = Nfa("ab", 2, [1, 0], [1], [(1, "b", 0), (0, "b", 1), (0, "a", 1), (0, "a", 0)])
    assert dumps_automaton(a).endswith('"transitions": [[0,"a",0],[0,"a",1],[0,"b",1],[1,"b",0]]}')
    assert '"initial": [0,1]' in dumps_automaton(a)


def test_dfa_format():
    d = Dfa("ab", 2, 0, [1], {(0, "a"): 1, (1, "b"): 0})
    text = dumps_automaton(d)
    assert text == ('{"alphabet": ["a","b"], "states": 2, "initial": 0, "final": [1], '
                    '"transitions": [[0,"a",1],[1,"b",0]], "deterministic": true}')
    assert loads_automaton(text) == d


def test_zero_state_automaton():
    text = '{"alphabet": ["a"], "states": 0, "initial": [], "final": [], "transitions": []}'
    a = loads_automaton(text)
    assert a.state_count == 0 and dumps_automaton(a) == text


def test_unknown_keys_ignored():
    a = loads_automaton(EXAMPLE[:-1] + ', "comment": "hi"}')
    assert a.state_count == 3


@pytest.mark.parametrize("text, match", [
    ("{", "invalid JSON"),
    ("[]", "JSON object"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": []}', "missing field 'transitions'"),
    ('{"alphabet": "ab", "states": 1, "initial": [0], "final": [], "transitions": []}', "list of symbol"),
    ('{"alphabet": ["a","a"], "states": 1, "initial": [0], "final": [], "transitions": []}', "twice"),
    ('{"alphabet": ["a"], "states": true, "initial": [0], "final": [], "transitions": []}', "'states'"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": [1], "transitions": []}', "final state 1"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": [], "transitions": [[0,"a"]]}', "transition #0"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": [], "transitions": [[0,"b",0]]}', "'b'"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": [], "transitions": [[0,"a",0],[0,"a",0]]}',
     "duplicate"),
    ('{"alphabet": ["a"], "states": 1, "initial": [0], "final": [], "transitions": [], "deterministic": true}',
     "single integer"),
    ('{"alphabet": ["a"], "states": 2, "initial": 0, "final": [], "transitions": [[0,"a",0],[0,"a",1]], '
     '"deterministic": true}', "not deterministic"),
])
def test_reader_diagnostics(text, match):
    with pytest.raises(InputError, match=match):
        loads_automaton(text)


def test_read_names_the_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{}")
    with pytest.raises(InputError, match="x.json: missing field"):
        read_automaton(p)


def test_fixtures_load():
    for path in sorted(FIXTURES.glob("*.json")):
        if path.name == "golden.json":
            continue
        a = read_automaton(path)
        assert a.state_count >= 1


@settings(max_examples=150, deadline=None)
@given(nfas())
def test_round_trip(a):
    text = dumps_automaton(a)
    assert loads_automaton(text) == a
    d = determinize(a)
    assert loads_automaton(dumps_automaton(d)) == d


def test_generator_outputs_round_trip(tmp_path):
    rng = random.Random(7)
    outputs = []
    for a in nfa_corpus(40, seed=3):
        outputs += [greibach_gadget(a).automaton, local_closure(a), determinize(a)]
    for _ in range(40):
        outputs.append(marked_automaton(random_regex(rng, 4, ("a", "b"))))
    for i, a in enumerate(outputs):
        path = tmp_path / f"{i}.json"
        write_automaton(path, a)
        assert read_automaton(path) == a


def test_dot_shapes():
    a = Nfa("ab", 3, [0, 1], [2], [(0, "a", 1), (0, "b", 1), (1, "b", 2)])
    text = to_dot(a, "demo")
    assert text.startswith('digraph "demo" {')
    for line in ("0 [shape=circle];", "2 [shape=doublecircle];", "__start0 -> 0;", "__start1 -> 1;",
                 '0 -> 1 [label="a,b"];', '1 -> 2 [label="b"];'):
        assert line in text
    assert "__start2" not in text


def test_dot_quotes_symbols():
    a = marked_automaton(parse_regex("'x\"y'", ['x"y']))
    assert '\\"' in to_dot(a)
