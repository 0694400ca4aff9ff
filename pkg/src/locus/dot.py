from __future__ import annotations

from collections import defaultdict

from .automata import as_nfa


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(a, name: str = "automaton") -> str:
    """Graphviz source: circles, doubled circles for final states, arrows into initial states.

    Parallel transitions between the same two states share one edge whose
    label lists the symbols.
    """
    a = as_nfa(a)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for q in range(a.state_count):
        shape = "doublecircle" if q in a.final else "circle"
        lines.append(f"  {q} [shape={shape}];")
    for q in sorted(a.initial):
        lines.append(f"  __start{q} [shape=point];")
        lines.append(f"  __start{q} -> {q};")
    labels = defaultdict(list)
    for p, sym, q in sorted(a.transitions):
        labels[(p, q)].append(sym)
    for (p, q), syms in sorted(labels.items()):
        lines.append(f"  {p} -> {q} [label={_quote(','.join(syms))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
