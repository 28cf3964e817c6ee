"""Exact arithmetic: GF(p^k) and Laurent polynomials over it."""

from .gf import FieldElement, FieldSpec, enumerate_elements, fe_add, fe_inv, fe_mul, field_make
from .laurent import (
    INFINITY,
    LaurentMatrix,
    LaurentPoly,
    Valuation,
    lp_add,
    lp_monomial_shift,
    lp_mul,
    lp_phi,
    lp_truncate_mod,
    lp_valuation,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "enumerate_elements",
    "fe_add",
    "fe_inv",
    "fe_mul",
    "field_make",
    "INFINITY",
    "LaurentMatrix",
    "LaurentPoly",
    "Valuation",
    "lp_add",
    "lp_monomial_shift",
    "lp_mul",
    "lp_phi",
    "lp_truncate_mod",
    "lp_valuation",
]
