"""
Maxwell Quasi-Trefftz Toolkit - Residual Verification and Oracle
=================================================================

Exact Taylor residuals of curl curl Pi - eps Pi and div(eps Pi), and an
independent brute-force computation of the quasi-Trefftz dimension as
the nullspace of the full constraint system on (P_p)^3.
"""

import logging
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MIN_QT_DEGREE
from diffops.matrices import ExactSolver, column_matrix, matrix_rank, nullspace_of
from diffops.operators import curl_curl, div_k
from errors import DegreeError
from polyalg.polynomials import (
    CoefficientJet,
    GradedVecPoly,
    HomScalarPoly,
    HomVecPoly,
    graded_parts_of_product,
)
from polyalg.rational import ONE, ZERO

logger = logging.getLogger(__name__)


class VerificationFlags(NamedTuple):
    """Outcome of the two residual tests."""
    curlcurl_residual_ok: bool
    divergence_residual_ok: bool

    @property
    def passed(self) -> bool:
        return self.curlcurl_residual_ok and self.divergence_residual_ok


def _aligned(Pi: GradedVecPoly, eps: CoefficientJet, p: int):
    return Pi.padded(p), eps.padded(p)


def curlcurl_residuals(Pi: GradedVecPoly, eps: CoefficientJet, p: int) -> List[HomVecPoly]:
    """Components of degree 0..p-2 of curl curl Pi - eps Pi."""
    Pi, eps = _aligned(Pi, eps, p)
    return [
        curl_curl(Pi.parts[k + 2]) - graded_parts_of_product(eps, Pi, k)
        for k in range(p - 1)
    ]


def divergence_residuals(Pi: GradedVecPoly, eps: CoefficientJet, order: int) -> List[HomScalarPoly]:
    """Components of degree 0..order of div(eps Pi)."""
    Pi, eps = _aligned(Pi, eps, order + 1)
    return [div_k(graded_parts_of_product(eps, Pi, d + 1)) for d in range(order + 1)]


def divergence_residual_ok(Pi: GradedVecPoly, eps: CoefficientJet, order: int) -> bool:
    return all(r.is_zero() for r in divergence_residuals(Pi, eps, order))


def verify(Pi: GradedVecPoly, eps: CoefficientJet, p: int) -> VerificationFlags:
    """
    Check T_{p-2}[curl curl Pi - eps Pi] = 0 and T_{p-1}[div(eps Pi)] = 0.

    Never raises on a nonzero residual; the flags report it.
    """
    curlcurl_ok = all(r.is_zero() for r in curlcurl_residuals(Pi, eps, p))
    divergence_ok = divergence_residual_ok(Pi, eps, p - 1)
    return VerificationFlags(curlcurl_ok, divergence_ok)


# =============================================================================
# ORACLE
# =============================================================================

def _residual_coordinates(Pi: GradedVecPoly, eps: CoefficientJet, p: int, divergence_order: int) -> List[Fraction]:
    coords: List[Fraction] = []
    for residual in curlcurl_residuals(Pi, eps, p):
        coords.extend(residual.coordinates())
    if divergence_order >= 0:
        for residual in divergence_residuals(Pi, eps, divergence_order):
            coords.extend(residual.coeffs)
    return coords


def constraint_rows(eps: CoefficientJet, p: int, divergence_order: Optional[int] = None) -> List[List[Fraction]]:
    """
    Matrix of Pi -> (curl-curl residual blocks, divergence residual blocks).

    Columns run over the coordinates of (P_p)^3 ordered by degree; a
    negative divergence_order drops the divergence rows.
    """
    if divergence_order is None:
        divergence_order = p - 1
    eps = eps.padded(p)
    n = GradedVecPoly.coordinate_count(p)
    columns = []
    unit = [ZERO] * n
    for j in range(n):
        unit[j] = ONE
        columns.append(_residual_coordinates(GradedVecPoly.from_coordinates(p, unit), eps, p, divergence_order))
        unit[j] = ZERO
    return column_matrix(columns)


def _require_qt_degree(p: int):
    if p < MIN_QT_DEGREE:
        raise DegreeError("p must exceed 2")


def oracle_dimension(eps: CoefficientJet, p: int) -> int:
    """Nullspace dimension of the full quasi-Trefftz constraint system."""
    _require_qt_degree(p)
    rows = constraint_rows(eps, p)
    n = GradedVecPoly.coordinate_count(p)
    dimension = n - matrix_rank(rows, n)
    logger.info(f"oracle: p={p}, {len(rows)} constraints on {n} unknowns, dimension {dimension}")
    return dimension


def curlcurl_only_dimension(eps: CoefficientJet, p: int) -> int:
    """Dimension when only T_{p-2}[curl curl Pi - eps Pi] = 0 is imposed."""
    _require_qt_degree(p)
    rows = constraint_rows(eps, p, divergence_order=-1)
    n = GradedVecPoly.coordinate_count(p)
    return n - matrix_rank(rows, n)


def oracle_nullspace(eps: CoefficientJet, p: int) -> List[GradedVecPoly]:
    _require_qt_degree(p)
    n = GradedVecPoly.coordinate_count(p)
    return [GradedVecPoly.from_coordinates(p, v) for v in nullspace_of(constraint_rows(eps, p), n)]


def oracle_contains(eps: CoefficientJet, p: int, polys: Sequence[GradedVecPoly]) -> List[bool]:
    """Membership of each polynomial in the span of the oracle nullspace."""
    basis = [v.coordinates() for v in oracle_nullspace(eps, p)]
    solver = ExactSolver.from_columns(basis, GradedVecPoly.coordinate_count(p))
    return [solver.is_consistent(Pi.padded(p).truncated(p).coordinates()) for Pi in polys]
