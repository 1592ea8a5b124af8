"""
Maxwell Quasi-Trefftz Toolkit - Graded Differential Operators
==============================================================

Gradient, divergence, curl, scalar and vector Laplacian as exact maps
between homogeneous blocks, and their canonical-basis matrices.

An operator of order gamma applied to input of degree < gamma returns the
zero element of the degree-0 codomain.
"""

import logging
from typing import List

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import CACHE_CONFIG
from data.cache_manager import CacheManager
from errors import DegreeError
from polyalg.multi_index import mono_count, monomials
from polyalg.polynomials import HomScalarPoly, HomVecPoly
from diffops.matrices import OpKind, OperatorMatrix

logger = logging.getLogger(__name__)


def grad_k(f: HomScalarPoly) -> HomVecPoly:
    """Gradient of a degree-(k+1) scalar."""
    if f.degree == 0:
        return HomVecPoly.zero(0)
    return HomVecPoly(f.degree - 1, tuple(f.partial(axis) for axis in range(3)))


def div_k(V: HomVecPoly) -> HomScalarPoly:
    """Divergence of a degree-(k+1) field."""
    if V.degree == 0:
        return HomScalarPoly.zero(0)
    return V[0].partial(0) + V[1].partial(1) + V[2].partial(2)


def curl_k(V: HomVecPoly) -> HomVecPoly:
    """Curl of a degree-(k+1) field."""
    if V.degree == 0:
        return HomVecPoly.zero(0)
    return HomVecPoly(V.degree - 1, (
        V[2].partial(1) - V[1].partial(2),
        V[0].partial(2) - V[2].partial(0),
        V[1].partial(0) - V[0].partial(1),
    ))


def scalar_lap_k(f: HomScalarPoly) -> HomScalarPoly:
    if f.degree < 2:
        return HomScalarPoly.zero(0)
    return f.partial(0).partial(0) + f.partial(1).partial(1) + f.partial(2).partial(2)


def vec_lap_k(V: HomVecPoly) -> HomVecPoly:
    if V.degree < 2:
        return HomVecPoly.zero(0)
    return HomVecPoly(V.degree - 2, tuple(scalar_lap_k(comp) for comp in V.components))


def curl_curl(V: HomVecPoly) -> HomVecPoly:
    return curl_k(curl_k(V))


def curl_curl_identity_check(V: HomVecPoly) -> bool:
    """curl curl V + vec_lap V - grad div V == 0."""
    if V.degree < 2:
        return curl_curl(V).is_zero()
    residual = curl_curl(V) + vec_lap_k(V) - grad_k(div_k(V))
    return residual.is_zero()


# =============================================================================
# MATRIX ASSEMBLY
# =============================================================================

def _matrix_to_json(matrix: OperatorMatrix):
    return matrix.to_json()


def matrix_matches_key(key, matrix: OperatorMatrix) -> bool:
    """A persisted matrix is usable only for the (op, k) it was built for."""
    op_name, k = key
    return matrix.op_kind.value == op_name and matrix.codomain_degree == k


_MATRIX_CACHE = CacheManager(
    "operator",
    persist_dir=CACHE_CONFIG.persist_dir,
    encoder=_matrix_to_json,
    decoder=OperatorMatrix.from_json,
    key_check=matrix_matches_key,
)


def matrix_cache() -> CacheManager:
    return _MATRIX_CACHE


def _apply(op_kind: OpKind, element):
    if op_kind is OpKind.GRAD:
        return grad_k(element)
    if op_kind is OpKind.DIV:
        return div_k(element)
    if op_kind is OpKind.CURL:
        return curl_k(element)
    if op_kind is OpKind.SCALAR_LAP:
        return scalar_lap_k(element)
    return vec_lap_k(element)


def _domain_basis(op_kind: OpKind, degree: int) -> List:
    scalars = [HomScalarPoly.monomial(idx) for idx in monomials(degree)]
    if not op_kind.domain_is_vector:
        return scalars
    return [HomVecPoly.axis_field(axis, s) for axis in range(3) for s in scalars]


def _build_matrix(op_kind: OpKind, k: int) -> OperatorMatrix:
    domain_degree = k + op_kind.order
    columns = []
    for element in _domain_basis(op_kind, domain_degree):
        image = _apply(op_kind, element)
        columns.append(image.coordinates() if op_kind.codomain_is_vector else image.coeffs)
    nrows = (3 if op_kind.codomain_is_vector else 1) * mono_count(k)
    entries = tuple(tuple(col[i] for col in columns) for i in range(nrows))
    return OperatorMatrix(op_kind, domain_degree, k, nrows, len(columns), entries)


def assemble_matrix(op_kind: OpKind, k: int) -> OperatorMatrix:
    """Matrix of the operator from degree k+gamma to degree k, memoized by (op_kind, k)."""
    if isinstance(op_kind, str):
        op_kind = OpKind(op_kind)
    if k < 0:
        raise DegreeError(f"degree must be non-negative, got {k}")
    return _MATRIX_CACHE.get_or_build((op_kind.value, k), lambda: _build_matrix(op_kind, k))
