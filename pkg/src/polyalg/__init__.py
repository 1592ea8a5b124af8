# Maxwell Quasi-Trefftz Toolkit - Polynomial Algebra Package
# Contains multi-indices, exact rationals and homogeneous polynomial types

from .multi_index import MultiIndex, mono_count, monomials, monomial_position, multi_index_at
from .rational import Rational, to_rational, format_rational, parse_rational
from .polynomials import (
    HomScalarPoly,
    HomVecPoly,
    GradedVecPoly,
    CoefficientJet,
    scalar_mul,
    hom_mul,
    graded_parts_of_product,
    combine_fields,
)

__all__ = [
    "MultiIndex",
    "mono_count",
    "monomials",
    "monomial_position",
    "multi_index_at",
    "Rational",
    "to_rational",
    "format_rational",
    "parse_rational",
    "HomScalarPoly",
    "HomVecPoly",
    "GradedVecPoly",
    "CoefficientJet",
    "scalar_mul",
    "hom_mul",
    "graded_parts_of_product",
    "combine_fields",
]
