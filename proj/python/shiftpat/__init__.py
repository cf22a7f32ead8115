"""Python bindings for the shiftpat C++ library.

Permutations are plain lists in one-line notation, words are strings in
PRE(PER) notation such as ``"2102212210(0)"``, and all counts are Python ints.
"""

from ._core import (
    BoundExceeded,
    ParseError,
    a_set,
    allowed,
    applicable_variants,
    base_assignment,
    check_conjecture1,
    check_conjecture2,
    compare_words,
    count_a,
    count_a_recurrence,
    count_binary,
    count_g,
    count_h,
    delta,
    enumerate_by_nmin,
    eulerian_row,
    extremal_sextet,
    forbidden,
    minimal_forbidden,
    n_min,
    n_min_marked,
    normalize_word,
    parse_permutation,
    pat,
    table,
    theta,
    witness,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
