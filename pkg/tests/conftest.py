import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from locus import Nfa  # noqa: E402
from locus.corpus import random_nfa  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def nfas(draw, max_states=5, max_alphabet=3):
    """Small random NFAs; shrinking drops transitions and states."""
    n = draw(st.integers(0, max_states))
    k = draw(st.integers(1, max_alphabet))
    alphabet = ["a", "b", "c"][:k]
    if n == 0:
        return Nfa(alphabet, 0, [], [], [])
    state = st.integers(0, n - 1)
    trans = draw(st.sets(st.tuples(state, st.sampled_from(alphabet), state), max_size=3 * n * k))
    initial = draw(st.sets(state, max_size=n))
    final = draw(st.sets(state, max_size=n))
    return Nfa(alphabet, n, initial, final, trans)


@st.composite
def seeded_nfas(draw, **kwargs):
    """NFAs from the corpus generator, driven by a drawn seed."""
    return random_nfa(random.Random(draw(st.integers(0, 2**32))), **kwargs)


# Shared small automata. Letters are single-character tokens, so a word can
# be written as a plain string where convenient.

@pytest.fixture
def ab_star():
    """(ab)* over {a, b}."""
    return Nfa("ab", 2, [0], [0], [(0, "a", 1), (1, "b", 0)])


@pytest.fixture
def ab_ba():
    """{ab, ba} over {a, b}."""
    return Nfa("ab", 5, [0], [2, 4], [(0, "a", 1), (1, "b", 2), (0, "b", 3), (3, "a", 4)])


@pytest.fixture
def only_ab():
    return Nfa("ab", 3, [0], [2], [(0, "a", 1), (1, "b", 2)])


@pytest.fixture
def b_star():
    """Σ* over {b}: the universal seed."""
    return Nfa("b", 1, [0], [0], [(0, "b", 0)])


@pytest.fixture
def just_b():
    """{b} over {b}: the non-universal seed."""
    return Nfa("b", 2, [0], [1], [(0, "b", 1)])


@pytest.fixture
def second_last_b():
    """Σ*bΣ over {a, b}."""
    return Nfa("ab", 3, [0], [2], [(0, "a", 0), (0, "b", 0), (0, "b", 1), (1, "a", 2), (1, "b", 2)])
