"""Regular expressions: parser, Glushkov position automaton, and a semantic enumerator.

Syntax::

    expr   := concat ('+' concat)*
    concat := star star*
    star   := atom '*'*
    atom   := '(' expr ')' | '∅' | 'ε' | '_' | "'" token "'" | character

``+`` is union, juxtaposition is concatenation, ``*`` is Kleene star.
Multi-character symbols must be quoted; whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .automata import DEFAULT_ENUMERATION_CAP, Nfa, Word, check_symbol
from .errors import InputError, ResourceLimitError


class RegexSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Literal:
    symbol: str


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    child: object


RegexAst = (Empty, Epsilon, Literal, Concat, Union, Star)

_SPECIAL = set("+*()'")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """(kind, value, 1-based position) triples; kind is 'op' or 'sym'."""
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "'":
            end = text.find("'", i + 1)
            if end < 0:
                raise RegexSyntaxError("unterminated quoted symbol", i + 1)
            token = text[i + 1:end]
            if not token or any(ch.isspace() for ch in token):
                raise RegexSyntaxError(f"invalid quoted symbol {token!r}", i + 1)
            out.append(("sym", token, i + 1))
            i = end + 1
        elif c in _SPECIAL or c in "∅ε_":
            out.append(("op", c, i + 1))
            i += 1
        else:
            out.append(("sym", c, i + 1))
            i += 1
    return out


class _Parser:
    def __init__(self, text: str, alphabet):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.end = len(text) + 1
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def where(self) -> int:
        tok = self.peek()
        return tok[2] if tok else self.end

    def parse(self):
        node = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()[1]!r}", self.where())
        return node

    def union(self):
        node = self.concat()
        while self.peek() is not None and self.peek()[:2] == ("op", "+"):
            self.pos += 1
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = self.star()
        while self._starts_atom():
            node = Concat(node, self.star())
        return node

    def _starts_atom(self) -> bool:
        tok = self.peek()
        return tok is not None and (tok[0] == "sym" or tok[1] in "(∅ε_")

    def star(self):
        node = self.atom()
        while self.peek() is not None and self.peek()[:2] == ("op", "*"):
            self.pos += 1
            node = Star(node)
        return node

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise RegexSyntaxError("expected an expression", self.end)
        kind, value, position = tok
        if kind == "sym":
            if self.alphabet is not None and value not in self.alphabet:
                raise InputError(f"literal {value!r} at position {position} is not in the alphabet "
                                 f"{sorted(self.alphabet)}")
            self.pos += 1
            return Literal(value)
        if value == "(":
            self.pos += 1
            if self.peek() is not None and self.peek()[:2] == ("op", ")"):
                raise RegexSyntaxError("empty parentheses are not allowed", self.where())
            node = self.union()
            if self.peek() is None or self.peek()[:2] != ("op", ")"):
                raise RegexSyntaxError("expected ')'", self.where())
            self.pos += 1
            return node
        if value == "∅":
            self.pos += 1
            return Empty()
        if value in "ε_":
            self.pos += 1
            return Epsilon()
        raise RegexSyntaxError("expected an expression", position)


def parse_regex(text: str, alphabet: Optional[Iterable[str]] = None):
    """Parse ``text``; when ``alphabet`` is given, every literal must belong to it."""
    if alphabet is not None:
        alphabet = frozenset(alphabet)
        for sym in alphabet:
            check_symbol(sym)
    return _Parser(text, alphabet).parse()


def to_text(r) -> str:
    """Render an AST back to the concrete syntax (fully parenthesised where needed)."""
    if isinstance(r, Empty):
        return "∅"
    if isinstance(r, Epsilon):
        return "ε"
    if isinstance(r, Literal):
        return r.symbol if len(r.symbol) == 1 and r.symbol not in _SPECIAL | set("∅ε_") \
            else f"'{r.symbol}'"
    if isinstance(r, Concat):
        # Both operators parse left-associative, so a right operand of the same kind keeps its parentheses.
        return f"{_wrap(r.left, Union)}{_wrap(r.right, (Union, Concat))}"
    if isinstance(r, Union):
        return f"{to_text(r.left)}+{_wrap(r.right, Union)}"
    if isinstance(r, Star):
        return f"{_wrap(r.child, (Union, Concat, Star))}*"
    raise TypeError(f"not a regex node: {r!r}")


def _wrap(r, kinds) -> str:
    return f"({to_text(r)})" if isinstance(r, kinds) else to_text(r)


def literals(r) -> list[str]:
    """Literal symbols in left-to-right occurrence order."""
    out = []
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, Literal):
            out.append(node.symbol)
        elif isinstance(node, (Concat, Union)):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, Star):
            stack.append(node.child)
    return out


def _positions(r):
    """Nullable flag, First, Last and Follow over literal positions 1..m."""
    follow: dict[int, set] = {}
    counter = [0]

    def walk(node):
        if isinstance(node, Empty):
            return False, set(), set()
        if isinstance(node, Epsilon):
            return True, set(), set()
        if isinstance(node, Literal):
            counter[0] += 1
            p = counter[0]
            follow[p] = set()
            return False, {p}, {p}
        if isinstance(node, Concat):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            for p in l1:
                follow[p] |= f2
            return n1 and n2, f1 | f2 if n1 else f1, l1 | l2 if n2 else l2
        if isinstance(node, Union):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            return n1 or n2, f1 | f2, l1 | l2
        if isinstance(node, Star):
            _, f, l = walk(node.child)
            for p in l:
                follow[p] |= f
            return True, f, l
        raise TypeError(f"not a regex node: {node!r}")

    nullable, first, last = walk(r)
    return nullable, first, last, follow


def _position_automaton(r, labels: list[str], alphabet) -> Nfa:
    nullable, first, last, follow = _positions(r)
    trans = [(0, labels[p - 1], p) for p in first]
    trans += [(p, labels[q - 1], q) for p, qs in follow.items() for q in qs]
    final = set(last) | ({0} if nullable else set())
    return Nfa(alphabet, len(labels) + 1, [0], final, trans)


def glushkov(r, alphabet: Optional[Iterable[str]] = None) -> Nfa:
    """Position automaton: one initial state plus one state per literal occurrence.

    The alphabet defaults to the symbols occurring in ``r``.
    """
    labels = literals(r)
    sigma = frozenset(labels) if alphabet is None else frozenset(alphabet)
    missing = set(labels) - sigma
    if missing:
        raise InputError(f"literals {sorted(missing)} are not in the alphabet")
    return _position_automaton(r, labels, sigma)


_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def marked_symbol(sym: str, index: int) -> str:
    return sym + str(index).translate(_SUBSCRIPTS)


def marked_automaton(r) -> Nfa:
    """Glushkov automaton with every literal occurrence renamed apart (``a`` at position 2 → ``a₂``)."""
    labels = [marked_symbol(s, i) for i, s in enumerate(literals(r), start=1)]
    if len(set(labels)) != len(labels):
        raise InputError("marked symbol names collide; symbol tokens must not end in subscript digits")
    return _position_automaton(r, labels, frozenset(labels))


def regex_semantics_enumerate(r, max_len: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Word]:
    """Words of the regex language up to ``max_len``, computed directly from the syntax tree."""
    if max_len < 0:
        raise InputError("max_len must be nonnegative")

    def guard(words: set) -> set:
        if len(words) > cap:
            raise ResourceLimitError(f"regex enumeration exceeded the cap of {cap} words")
        return words

    def concat(xs: set, ys: set) -> set:
        return guard({x + y for x in xs for y in ys if len(x) + len(y) <= max_len})

    def sem(node) -> set:
        if isinstance(node, Empty):
            return set()
        if isinstance(node, Epsilon):
            return {()}
        if isinstance(node, Literal):
            return {(node.symbol,)} if max_len >= 1 else set()
        if isinstance(node, Concat):
            return concat(sem(node.left), sem(node.right))
        if isinstance(node, Union):
            return guard(sem(node.left) | sem(node.right))
        if isinstance(node, Star):
            inner = sem(node.child) - {()}
            result = {()}
            frontier = {()}
            while frontier:
                frontier = concat(frontier, inner) - result
                result |= frontier
                guard(result)
            return result
        raise TypeError(f"not a regex node: {node!r}")

    return sorted(sem(r), key=lambda w: (len(w), w))
