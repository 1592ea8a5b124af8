# Maxwell Quasi-Trefftz Toolkit - Quasi-Trefftz Package
# Contains construction, verification, enumeration and dimension formulas

from .parameters import FreeParameters, parameter_slots, slot_of, element_name
from .verification import (
    VerificationFlags,
    verify,
    curlcurl_residuals,
    divergence_residuals,
    divergence_residual_ok,
    oracle_dimension,
    curlcurl_only_dimension,
    oracle_nullspace,
    oracle_contains,
)
from .construction import ConstructionStep, construct, construct_single_step, sign_self_test
from .dimensions import (
    dimension_formula,
    pw_dimension,
    curlcurl_only_formula,
    pw_comparison_table,
    scalar_dimension_table,
)
from .enumeration import QTBasisElement, enumerate_basis, coefficient_rank

__all__ = [
    "FreeParameters",
    "parameter_slots",
    "slot_of",
    "element_name",
    "VerificationFlags",
    "verify",
    "curlcurl_residuals",
    "divergence_residuals",
    "divergence_residual_ok",
    "oracle_dimension",
    "curlcurl_only_dimension",
    "oracle_nullspace",
    "oracle_contains",
    "ConstructionStep",
    "construct",
    "construct_single_step",
    "sign_self_test",
    "dimension_formula",
    "pw_dimension",
    "curlcurl_only_formula",
    "pw_comparison_table",
    "scalar_dimension_table",
    "QTBasisElement",
    "enumerate_basis",
    "coefficient_rank",
]
