"""Exact arithmetic in GF(2^k) and K = GF(2^k)(s)."""

from .decide import (
    ASReduction,
    Unsupported,
    in_square_span,
    is_fourth_power_with_witness,
    is_square,
    is_square_with_witness,
    reduce_artin_schreier,
    solve_artin_schreier,
    solve_quadratic_char2,
    split_quadratic,
    square_decomposition,
)
from .extension import Embedding, extension, identity, split_roots, splitting_degree
from .gf import GF2k, GFElement, default_modulus, format_gf2_poly, gf, gf_sqrt
from .ratfunc import FieldDescriptor, RatFunc, random_ratfunc
from .text import ParseError, parse_gf, parse_ratfunc

__all__ = [
    "ASReduction",
    "Embedding",
    "FieldDescriptor",
    "GF2k",
    "GFElement",
    "ParseError",
    "RatFunc",
    "Unsupported",
    "default_modulus",
    "extension",
    "format_gf2_poly",
    "gf",
    "gf_sqrt",
    "identity",
    "in_square_span",
    "is_fourth_power_with_witness",
    "is_square",
    "random_ratfunc",
    "is_square_with_witness",
    "parse_gf",
    "parse_ratfunc",
    "reduce_artin_schreier",
    "solve_artin_schreier",
    "solve_quadratic_char2",
    "split_quadratic",
    "split_roots",
    "splitting_degree",
    "square_decomposition",
]
