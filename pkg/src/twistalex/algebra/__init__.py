"""Exact arithmetic: cyclotomic numbers, Laurent polynomials, polynomial matrices."""
from .cyclotomic import (
    CycloNumber,
    common_modulus,
    cyclo_new,
    cyclotomic_polynomial,
    embed_modulus,
    euler_phi,
    lcm,
)
from .laurent import (
    LaurentPoly,
    RationalFunction,
    eq_up_to_units,
    normalize_units,
    poly_divide_exact,
    poly_evaluate,
    poly_substitute,
)
from .matrix import PolyMatrix, block_matrix, cofactor_determinant, determinant

__all__ = [
    "CycloNumber",
    "LaurentPoly",
    "PolyMatrix",
    "RationalFunction",
    "block_matrix",
    "cofactor_determinant",
    "common_modulus",
    "cyclo_new",
    "cyclotomic_polynomial",
    "determinant",
    "embed_modulus",
    "eq_up_to_units",
    "euler_phi",
    "lcm",
    "normalize_units",
    "poly_divide_exact",
    "poly_evaluate",
    "poly_substitute",
]
