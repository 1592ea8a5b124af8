"""
Maxwell Quasi-Trefftz Toolkit - Restricted Operator Solvers
============================================================

Right inverses of the divergence restricted to I~*_{k+1} (bijective) and
of the vector Laplacian restricted to S~*_{k+2} (surjective onto S~_k),
the kernel of the latter, and the full-space variants.
"""

import logging
from typing import List, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bases.spaces import SpaceBasis, SpaceTag, solenoidal_basis, star_complements
from data.cache_manager import CacheManager
from diffops.matrices import ExactSolver, column_matrix, matrix_rank, nullspace_of
from diffops.operators import div_k, vec_lap_k
from errors import DivergenceObstructionError
from polyalg.multi_index import mono_count
from polyalg.polynomials import HomScalarPoly, HomVecPoly

logger = logging.getLogger(__name__)

_SOLVERS = CacheManager("solver")


def solver_cache() -> CacheManager:
    return _SOLVERS


# =============================================================================
# DIVERGENCE
# =============================================================================

def _div_on_irr_star(k: int) -> ExactSolver:
    irr_star = star_complements(k + 1)[1]
    columns = [div_k(vec).coeffs for vec in irr_star.vectors]
    return ExactSolver.from_columns(columns, mono_count(k))


def solve_div_irrotational(rhs: HomScalarPoly) -> HomVecPoly:
    """The unique G in I~*_{k+1} with div G = rhs (rhs of degree k)."""
    k = rhs.degree
    solver = _SOLVERS.get_or_build(("div-irr-star", k), lambda: _div_on_irr_star(k))
    coords = solver.solve(rhs.coeffs)
    return star_complements(k + 1)[1].combine(coords)


def solve_div_any(rhs: HomScalarPoly) -> HomVecPoly:
    """Closed-form preimage: each term c X^i maps to (c X^{i+e1} / (i1+1), 0, 0)."""
    degree = rhs.degree + 1
    terms = {idx.shifted(0, 1): coef / (idx.i1 + 1) for idx, coef in rhs.terms()}
    first = HomScalarPoly.from_terms(degree, terms)
    return HomVecPoly.axis_field(0, first)


# =============================================================================
# VECTOR LAPLACIAN
# =============================================================================

def _check_solenoidal(rhs: HomVecPoly):
    if rhs.degree > 0 and not div_k(rhs).is_zero():
        raise DivergenceObstructionError(
            f"divergence obstruction: degree-{rhs.degree} right-hand side is not solenoidal"
        )


def _veclap_columns(basis: SpaceBasis) -> List[Tuple]:
    return [vec_lap_k(vec).coordinates() for vec in basis.vectors]


def _veclap_solver(basis: SpaceBasis, k: int) -> ExactSolver:
    return ExactSolver.from_columns(_veclap_columns(basis), 3 * mono_count(k))


def solve_veclap_solenoidal(rhs: HomVecPoly) -> HomVecPoly:
    """Some F in S~*_{k+2} with vec_lap F = rhs; rhs must be solenoidal of degree k."""
    _check_solenoidal(rhs)
    k = rhs.degree
    sol_star = star_complements(k + 2)[0]
    solver = _SOLVERS.get_or_build(("veclap-sol-star", k), lambda: _veclap_solver(sol_star, k))
    return sol_star.combine(solver.solve(rhs.coordinates()))


def solve_veclap_full(rhs: HomVecPoly) -> HomVecPoly:
    """Some F in the full S~_{k+2} with vec_lap F = rhs."""
    _check_solenoidal(rhs)
    k = rhs.degree
    sol = solenoidal_basis(k + 2)
    solver = _SOLVERS.get_or_build(("veclap-sol", k), lambda: _veclap_solver(sol, k))
    return sol.combine(solver.solve(rhs.coordinates()))


def _build_restricted_kernel(k: int) -> SpaceBasis:
    sol_star = star_complements(k + 2)[0]
    columns = _veclap_columns(sol_star)
    rows = column_matrix(columns)
    kernel = nullspace_of(rows, len(columns))
    logger.debug(f"restricted vector-Laplacian kernel at k={k}: dimension {len(kernel)}")
    return SpaceBasis(SpaceTag.VECLAP_KERNEL, k + 2, tuple(sol_star.combine(c) for c in kernel))


def veclap_restricted_kernel(k: int) -> SpaceBasis:
    """Kernel of vec_lap_k on S~*_{k+2}; size 2k+5."""
    return _SOLVERS.get_or_build(("veclap-kernel", k), lambda: _build_restricted_kernel(k))


def veclap_solenoidal_rank(k: int) -> int:
    """Rank of vec_lap_k on the full S~_{k+2}."""
    columns = _veclap_columns(solenoidal_basis(k + 2))
    return matrix_rank(column_matrix(columns), len(columns))


def veclap_solenoidal_kernel_dimension(k: int) -> int:
    return solenoidal_basis(k + 2).dimension - veclap_solenoidal_rank(k)
