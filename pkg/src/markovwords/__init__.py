"""Ordered Markov words, their palindromic circular shifts, and exact
Markov spectrum values via the Perron identity.

The package is organised around three layers: word algebra (``words``),
the integer sequences and concatenation graph generating the family S(n)
(``diatomic``, ``tree``), and the verification / spectrum layers on top
(``theorems``, ``spectrum``). A CLI (``markovwords``) fronts all of it.
"""

from .diatomic import a_of, a_star, stern, stern_row
from .spectrum import (
    BQForm,
    LatticeMinimum,
    MarkovValue,
    QuadraticSurd,
    bqf_min,
    cf_eval,
    cf_matrix,
    is_markov_sequence,
    markov_element,
    markov_value,
    zero_tail,
)
from .theorems import (
    VerificationReport,
    block_exponent_profile,
    block_rearrangement,
    even_index_factorization,
    iter_block_rearrangement,
    iter_equivalence,
    iter_lemma_checks,
    iter_shift_palindromic,
    length_of_s,
    mirror_index,
    odd_index_factorization,
    random_palindrome,
    verify_block_rearrangement,
    verify_mirror,
    verify_shift_palindromic,
)
from .tree import (
    BlockWord,
    Vertex,
    apply_path,
    block_counts,
    block_labels,
    block_word,
    flank_indices,
    level,
    path_precedes,
    root,
    s_graph,
    s_rec,
    step_left,
    step_right,
)
from .words import (
    Word,
    concat,
    evenly_palindromic_shift,
    format_word,
    half_ceil,
    half_floor,
    is_oddly_palindromic,
    is_palindrome,
    parse_word,
    reverse,
    rotate,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "BQForm",
    "BlockWord",
    "LatticeMinimum",
    "MarkovValue",
    "QuadraticSurd",
    "VerificationReport",
    "Vertex",
    "Word",
    "a_of",
    "a_star",
    "apply_path",
    "block_counts",
    "block_exponent_profile",
    "block_labels",
    "block_word",
    "bqf_min",
    "block_rearrangement",
    "cf_eval",
    "cf_matrix",
    "concat",
    "even_index_factorization",
    "evenly_palindromic_shift",
    "flank_indices",
    "format_word",
    "half_ceil",
    "half_floor",
    "is_markov_sequence",
    "is_oddly_palindromic",
    "is_palindrome",
    "iter_block_rearrangement",
    "iter_equivalence",
    "iter_lemma_checks",
    "iter_shift_palindromic",
    "length_of_s",
    "level",
    "markov_element",
    "markov_value",
    "mirror_index",
    "odd_index_factorization",
    "parse_word",
    "path_precedes",
    "random_palindrome",
    "reverse",
    "root",
    "rotate",
    "s_graph",
    "s_rec",
    "step_left",
    "step_right",
    "stern",
    "stern_row",
    "verify_block_rearrangement",
    "verify_mirror",
    "verify_shift_palindromic",
    "word",
    "zero_tail",
]
