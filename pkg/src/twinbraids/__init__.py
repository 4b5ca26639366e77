"""Planar (twin) braid groups and normal forms for pure braids on six strands."""

from .graph_words import (
    CommutationGraph,
    a_graph,
    commutator_is_trivial,
    equal,
    inverse,
    normal_form,
    twin_graph,
    word_from_text,
    word_to_text,
)
from .twin_braids import (
    DOUBLEPRIMED,
    PRIMED,
    SHUFFLE_TRIPLES,
    colour_permutations,
    gh_words,
    is_pure,
    permutation_of,
    realize_a_generator,
    shuffle_word,
)
from .bicoloured import HLetter, decompose_h, h_normal_form, realize_h, table_cell
from .q_subgroup import enumerate_x, rewrite_q, z_transversal

__all__ = [
    "CommutationGraph",
    "DOUBLEPRIMED",
    "HLetter",
    "PRIMED",
    "SHUFFLE_TRIPLES",
    "a_graph",
    "colour_permutations",
    "commutator_is_trivial",
    "decompose_h",
    "enumerate_x",
    "equal",
    "gh_words",
    "h_normal_form",
    "inverse",
    "is_pure",
    "normal_form",
    "permutation_of",
    "realize_a_generator",
    "realize_h",
    "rewrite_q",
    "shuffle_word",
    "table_cell",
    "twin_graph",
    "word_from_text",
    "word_to_text",
    "z_transversal",
]

__version__ = "0.1.0"
