"""Generalized quasi-cyclic codes over finite fields."""

from .gf import Field, FieldElement, field_of_order, make_extension, prime_field
from .polyring import Poly, factor_xm_minus_1
from .lincode import LinearCode
from .gqc import GqcCode, decompose, reconstruct, to_linear

__all__ = [
    "Field",
    "FieldElement",
    "GqcCode",
    "LinearCode",
    "Poly",
    "decompose",
    "factor_xm_minus_1",
    "field_of_order",
    "make_extension",
    "prime_field",
    "reconstruct",
    "to_linear",
]
