# Maxwell Quasi-Trefftz Toolkit - Differential Operators Package
# Contains graded operators and exact rational matrix algebra

from .matrices import (
    OpKind,
    OperatorMatrix,
    ExactSolver,
    rank,
    nullspace,
    rref,
    compose,
    column_matrix,
    span_contains,
    rank_of_vectors,
)
from .operators import (
    grad_k,
    div_k,
    curl_k,
    scalar_lap_k,
    vec_lap_k,
    curl_curl,
    curl_curl_identity_check,
    assemble_matrix,
    matrix_cache,
)

__all__ = [
    "OpKind",
    "OperatorMatrix",
    "ExactSolver",
    "rank",
    "nullspace",
    "rref",
    "compose",
    "column_matrix",
    "span_contains",
    "rank_of_vectors",
    "grad_k",
    "div_k",
    "curl_k",
    "scalar_lap_k",
    "vec_lap_k",
    "curl_curl",
    "curl_curl_identity_check",
    "assemble_matrix",
    "matrix_cache",
]
