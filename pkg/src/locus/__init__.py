"""Deciding locality of regular languages given as NFAs, DFAs or regular expressions."""
from .automata import (Dfa, Nfa, accepts, complete, determinize, enumerate_words,
                       format_word, is_empty, product_intersection, trim, universal_nfa)
from .errors import InputError, LocusError, PreconditionError, ResourceLimitError
from .io import dumps_automaton, loads_automaton, read_automaton, write_automaton
from .inclusion import (InclusionConfig, equivalence, inclusion, inclusion_oracle,
                        universality)
from .local import (LocalSpec, cartesian_oracle, extract_local_spec, is_local_dfa,
                    is_local_nfa, local_closure, spec_to_dfa)
from .reduction import (GadgetOutput, greibach_gadget, is_infix_free,
                        verify_reduction)
from .regex import glushkov, marked_automaton, parse_regex, regex_semantics_enumerate
from .report import CartesianWitness, CheckReport

__all__ = [
    "Dfa", "Nfa", "accepts", "complete", "determinize", "enumerate_words", "format_word",
    "is_empty", "product_intersection", "trim", "universal_nfa",
    "dumps_automaton", "loads_automaton", "read_automaton", "write_automaton",
    "InputError", "LocusError", "PreconditionError", "ResourceLimitError",
    "InclusionConfig", "equivalence", "inclusion", "inclusion_oracle", "universality",
    "LocalSpec", "cartesian_oracle", "extract_local_spec", "is_local_dfa", "is_local_nfa",
    "local_closure", "spec_to_dfa",
    "GadgetOutput", "greibach_gadget", "is_infix_free", "verify_reduction",
    "glushkov", "marked_automaton", "parse_regex", "regex_semantics_enumerate",
    "CartesianWitness", "CheckReport",
]

__version__ = "0.1.0"
