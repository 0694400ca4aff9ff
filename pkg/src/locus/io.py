"""Automaton JSON files.

Example::

    {"alphabet": ["a","b"], "states": 3, "initial": [0], "final": [2], "transitions": [[0,"a",1],[1,"b",2]]}

DFA files carry a single integer ``"initial"`` and ``"deterministic": true``.
Writers emit the keys in that order with transitions sorted by
``(source, symbol, target)``; readers ignore keys they do not know.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .automata import Dfa, Nfa, check_symbol
from .errors import InputError


def _dump(value) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


def _is_id(q) -> bool:
    return isinstance(q, int) and not isinstance(q, bool)


def dumps_automaton(a: Union[Nfa, Dfa], extra: Optional[dict] = None) -> str:
    if isinstance(a, Dfa):
        initial = a.initial
        triples = a.triples()
    else:
        initial = sorted(a.initial)
        triples = sorted(a.transitions)
    fields = [
        ("alphabet", sorted(a.alphabet)),
        ("states", a.state_count),
        ("initial", initial),
        ("final", sorted(a.final)),
        ("transitions", [list(t) for t in triples]),
    ]
    if isinstance(a, Dfa):
        fields.append(("deterministic", True))
    for key, value in (extra or {}).items():
        fields.append((key, value))
    return "{" + ", ".join(f"{_dump(k)}: {_dump(v)}" for k, v in fields) + "}"


def loads_automaton(text: str) -> Union[Nfa, Dfa]:
    """Parse and validate; errors name the first violated invariant."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("automaton file must hold a JSON object")
    for key in ("alphabet", "states", "initial", "final", "transitions"):
        if key not in doc:
            raise InputError(f"missing field {key!r}")
    alphabet = doc["alphabet"]
    if not isinstance(alphabet, list):
        raise InputError("field 'alphabet' must be a list of symbol tokens")
    for sym in alphabet:
        check_symbol(sym)
    if len(set(alphabet)) != len(alphabet):
        raise InputError("field 'alphabet' lists a symbol twice")
    states = doc["states"]
    if not isinstance(states, int) or isinstance(states, bool) or states < 0:
        raise InputError("field 'states' must be a nonnegative integer")
    if not isinstance(doc["final"], list) or not all(_is_id(q) for q in doc["final"]):
        raise InputError("field 'final' must be a list of state ids")
    transitions = doc["transitions"]
    if not isinstance(transitions, list):
        raise InputError("field 'transitions' must be a list of [source, symbol, target] triples")
    for i, t in enumerate(transitions):
        if not (isinstance(t, list) and len(t) == 3 and isinstance(t[1], str)
                and _is_id(t[0]) and _is_id(t[2])):
            raise InputError(f"transition #{i} {t!r} is not a [source, symbol, target] triple")
    deterministic = doc.get("deterministic", False)
    if deterministic is not False and deterministic is not True:
        raise InputError("field 'deterministic' must be a boolean")
    if deterministic:
        if not isinstance(doc["initial"], int) or isinstance(doc["initial"], bool):
            raise InputError("a deterministic automaton needs a single integer 'initial'")
        return Dfa.from_triples(alphabet, states, doc["initial"], doc["final"],
                                [tuple(t) for t in transitions])
    if not isinstance(doc["initial"], list) or not all(_is_id(q) for q in doc["initial"]):
        raise InputError("field 'initial' must be a list of state ids")
    if len(set(map(tuple, transitions))) != len(transitions):
        raise InputError("duplicate transition")
    return Nfa(alphabet, states, doc["initial"], doc["final"], [tuple(t) for t in transitions])


def read_automaton(path) -> Union[Nfa, Dfa]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads_automaton(text)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def write_automaton(path, a: Union[Nfa, Dfa], extra: Optional[dict] = None) -> None:
    Path(path).write_text(dumps_automaton(a, extra) + "\n", encoding="utf-8")
