"""
Maxwell Quasi-Trefftz Toolkit - Helmholtz Decomposition
========================================================

Unique splitting V = F + G + H of a homogeneous vector field into its
solenoidal-complement, irrotational-complement and harmonic parts, and
the non-unique solenoidal/gradient split obtained from one Laplace solve.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bases.spaces import SpaceBasis, harmonic_basis, star_complements
from data.cache_manager import CacheManager
from diffops.matrices import ExactSolver
from diffops.operators import OpKind, assemble_matrix, div_k, grad_k
from polyalg.multi_index import mono_count
from polyalg.polynomials import HomScalarPoly, HomVecPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HelmholtzTriple:
    """F in S~*_k, G in I~*_k, H in H~_k with F + G + H = V."""
    F: HomVecPoly
    G: HomVecPoly
    H: HomVecPoly
    degree: int

    def reconstruct(self) -> HomVecPoly:
        return self.F + self.G + self.H

    def certify(self) -> bool:
        """Each component lies in its tagged space."""
        sol_star, irr_star = star_complements(self.degree)
        return (
            sol_star.contains(self.F)
            and irr_star.contains(self.G)
            and harmonic_basis(self.degree).contains(self.H)
        )


@dataclass(frozen=True)
class _Frame:
    """Concatenated basis [S~*_k | I~*_k | H~_k] and its factorization."""
    sol_star: SpaceBasis
    irr_star: SpaceBasis
    harmonic: SpaceBasis
    solver: ExactSolver

    @property
    def columns(self):
        return (self.sol_star.coordinate_vectors()
                + self.irr_star.coordinate_vectors()
                + self.harmonic.coordinate_vectors())


_FACTORIZATIONS = CacheManager("helmholtz")


def _build_frame(k: int) -> _Frame:
    sol_star, irr_star = star_complements(k)
    harmonic = harmonic_basis(k)
    columns = sol_star.coordinate_vectors() + irr_star.coordinate_vectors() + harmonic.coordinate_vectors()
    solver = ExactSolver.from_columns(columns, 3 * mono_count(k))
    logger.debug(f"Helmholtz frame at degree {k}: {len(columns)} columns, rank {solver.rank}")
    return _Frame(sol_star, irr_star, harmonic, solver)


def _frame(k: int) -> _Frame:
    return _FACTORIZATIONS.get_or_build(("frame", k), lambda: _build_frame(k))


def decompose(V: HomVecPoly, column_order: Optional[Sequence[int]] = None) -> HelmholtzTriple:
    """
    Unique Helmholtz decomposition of V.

    Args:
        V: Homogeneous field of degree k
        column_order: Optional permutation of the concatenated basis columns;
            the system is then re-factored in that order

    Returns:
        HelmholtzTriple with F + G + H == V
    """
    k = V.degree
    if k == 0:
        zero = HomVecPoly.zero(0)
        return HelmholtzTriple(zero, zero, V, 0)

    frame = _frame(k)
    if column_order is None:
        coords = frame.solver.solve(V.coordinates())
    else:
        columns = frame.columns
        order = list(column_order)
        if sorted(order) != list(range(len(columns))):
            raise ValueError("column_order must be a permutation of the basis columns")
        permuted = ExactSolver.from_columns([columns[j] for j in order], 3 * mono_count(k))
        permuted_coords = permuted.solve(V.coordinates())
        coords = [None] * len(columns)
        for position, j in enumerate(order):
            coords[j] = permuted_coords[position]

    n_sol = frame.sol_star.dimension
    n_irr = frame.irr_star.dimension
    return HelmholtzTriple(
        F=frame.sol_star.combine(coords[:n_sol]),
        G=frame.irr_star.combine(coords[n_sol:n_sol + n_irr]),
        H=frame.harmonic.combine(coords[n_sol + n_irr:]),
        degree=k,
    )


def _laplace_solver(k: int) -> ExactSolver:
    return _FACTORIZATIONS.get_or_build(
        ("lap", k),
        lambda: ExactSolver(assemble_matrix(OpKind.SCALAR_LAP, k).entries, mono_count(k + 2)),
    )


def split_sol_irr(V: HomVecPoly) -> Tuple[HomVecPoly, HomVecPoly]:
    """
    Split V = F + G with div F = 0 and G = grad g, where Laplace g = div V.

    The preimage g is the particular solution of the deterministic
    elimination; other splits exist.
    """
    if V.degree == 0:
        return V, HomVecPoly.zero(0)
    k = V.degree - 1
    rhs = div_k(V)
    g = HomScalarPoly(k + 2, _laplace_solver(k).solve(rhs.coeffs))
    G = grad_k(g)
    return V - G, G
