"""Exact polynomial and algebraic-number arithmetic over the rationals."""

from fractions import Fraction

from .complex import RootBox, box_contains_root_of, isolate_complex_roots, refine_box
from .composed import composed_product, composed_sum, modulus_squared, real_part_doubled
from .polynomial import (
    Polynomial,
    as_fraction,
    interpolate,
    poly,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)
from .real import (
    AlgebraicReal,
    Ordering,
    compare_algebraic,
    count_roots,
    isolate_real_roots,
    sign_at,
    sturm_sequence,
)

Rational = Fraction

__all__ = [
    "AlgebraicReal",
    "Ordering",
    "Polynomial",
    "Rational",
    "RootBox",
    "as_fraction",
    "box_contains_root_of",
    "compare_algebraic",
    "composed_product",
    "composed_sum",
    "count_roots",
    "interpolate",
    "isolate_complex_roots",
    "isolate_real_roots",
    "modulus_squared",
    "poly",
    "poly_gcd",
    "real_part_doubled",
    "refine_box",
    "resultant",
    "sign_at",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_sequence",
]
