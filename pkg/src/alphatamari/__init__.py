"""Parabolic (alpha-)Tamari lattices: avoiding permutations, alpha-codes,
reduced vectors and bracket vectors, with the bijections between them."""

from .codes import (
    AlphaCode,
    check_code,
    componentwise_leq,
    decode,
    encode,
    enumerate_codes,
    leftmost_zero,
    sees,
    validate_code,
)
from .combinatorics import (
    AlphaPermutation,
    Composition,
    alpha_permutation,
    compositions,
    covers,
    enumerate_alpha_permutations,
    enumerate_avoiders,
    has_alpha_231_pattern,
    inversion_set,
    is_alpha_permutation,
    make_composition,
    parse_composition,
    parse_permutation,
    region_of,
    weak_leq,
)
from .errors import *  # noqa: F401,F403
from .nu import (
    BouncePath,
    BracketVector,
    ReducedVector,
    bounce_path,
    enumerate_brackets,
    enumerate_reduced,
    extend,
    fixed_positions,
    from_code,
    is_bracket_vector,
    is_reduced_vector,
    min_bracket_vector,
    reduce,
    to_code,
)
from .poset import Poset, build_poset, export, fibers, is_lattice, join, meet, projection, read_json
from .report import Report
from .verify import (
    CheckReport,
    catalan_crosscheck,
    check_lemma_suite,
    check_theorem_code_iso,
    check_theorem_nu_iso,
    sweep,
)

__version__ = "0.1.0"
