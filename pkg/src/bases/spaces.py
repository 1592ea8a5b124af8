"""
Maxwell Quasi-Trefftz Toolkit - Space Bases
============================================

Explicit bases of the homogeneous solenoidal, irrotational and harmonic
vector fields, the gradient range and curl kernel, and the complements
of the harmonic fields used by the Helmholtz decomposition.

At degree 0 the solenoidal, irrotational and harmonic spaces are all the
constant fields and both complements are empty.
"""

import logging
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from data.cache_manager import CacheManager
from diffops.matrices import ExactSolver, nullspace_of, rank_of_vectors, rref
from diffops.operators import OpKind, assemble_matrix, grad_k
from errors import DegreeError
from polyalg.multi_index import mono_count, monomials
from polyalg.polynomials import HomScalarPoly, HomVecPoly, combine_fields
from polyalg.rational import RationalLike
from bases.psi import psi, psi_labels

logger = logging.getLogger(__name__)


class SpaceTag(Enum):
    """Named subspaces of homogeneous vector fields."""
    SOLENOIDAL = "sol"
    IRROTATIONAL = "irr"
    HARMONIC = "harm"
    SOLENOIDAL_STAR = "sol-star"
    IRROTATIONAL_STAR = "irr-star"
    RANGE_G = "range-g"
    KERNEL_C = "ker-c"
    VECLAP_KERNEL = "veclap-ker"


@dataclass(frozen=True)
class SpaceBasis:
    """Basis of a tagged space of degree-k homogeneous vector fields."""
    space_tag: SpaceTag
    degree: int
    vectors: Tuple[HomVecPoly, ...]
    _solver: List = field(default_factory=list, init=False, repr=False, compare=False)
    _solver_lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(self.vectors))
        for vec in self.vectors:
            if vec.degree != self.degree:
                raise DegreeError(f"{self.space_tag.value} basis vector of degree {vec.degree}, expected {self.degree}")

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    @property
    def ambient_dimension(self) -> int:
        return 3 * mono_count(self.degree)

    def coordinate_vectors(self) -> List[Tuple[Fraction, ...]]:
        return [vec.coordinates() for vec in self.vectors]

    def certify_independent(self) -> bool:
        return rank_of_vectors(self.coordinate_vectors()) == self.dimension

    def solver(self) -> ExactSolver:
        with self._solver_lock:
            if not self._solver:
                self._solver.append(
                    ExactSolver.from_columns(self.coordinate_vectors(), self.ambient_dimension)
                )
            return self._solver[0]

    def coordinates_of(self, V: HomVecPoly) -> Tuple[Fraction, ...]:
        """Coordinates of V in this basis; raises InconsistentSystemError for non-members."""
        if V.degree != self.degree:
            raise DegreeError(f"field of degree {V.degree} in a degree-{self.degree} space")
        return self.solver().solve(V.coordinates())

    def contains(self, V: HomVecPoly) -> bool:
        if V.degree != self.degree:
            return V.is_zero()
        return self.solver().is_consistent(V.coordinates())

    def combine(self, coords: Sequence[RationalLike]) -> HomVecPoly:
        if len(coords) != self.dimension:
            raise ValueError(f"{self.space_tag.value}_{self.degree} needs {self.dimension} coordinates, got {len(coords)}")
        return combine_fields(self.degree, self.vectors, coords)


_SPACE_CACHE = CacheManager("space")


def space_cache() -> CacheManager:
    return _SPACE_CACHE


def _require_degree(k: int):
    if k < 0:
        raise DegreeError(f"degree must be non-negative, got {k}")


def _constant_fields() -> List[HomVecPoly]:
    return [HomVecPoly.constant([1 if axis == a else 0 for axis in range(3)]) for a in range(3)]


def greedy_extension(base: Sequence[HomVecPoly], candidates: Sequence[HomVecPoly]) -> List[int]:
    """
    Indices of the candidates kept when extending `base` greedily.

    A candidate is kept when it is independent of the base and of the
    candidates kept before it, which is exactly a pivot column of the
    reduced echelon form of [base | candidates].
    """
    columns = [vec.coordinates() for vec in base] + [vec.coordinates() for vec in candidates]
    if not columns:
        return []
    rows = [[col[i] for col in columns] for i in range(len(columns[0]))]
    _, pivots = rref(rows, len(columns))
    offset = len(base)
    return [p - offset for p in pivots if p >= offset]


# =============================================================================
# SPACES
# =============================================================================

def solenoidal_basis(k: int) -> SpaceBasis:
    """S~_k = ker D_{k-1}, spanned by the Psi families; size (k+1)(k+3)."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build(
        (SpaceTag.SOLENOIDAL.value, k),
        lambda: SpaceBasis(SpaceTag.SOLENOIDAL, k, tuple(psi(label) for label in psi_labels(k))),
    )


def _gradients_of_monomials(tag: SpaceTag, degree: int) -> SpaceBasis:
    vectors = tuple(grad_k(HomScalarPoly.monomial(idx)) for idx in monomials(degree + 1))
    return SpaceBasis(tag, degree, vectors)


def irrotational_basis(k: int) -> SpaceBasis:
    """I~_k = R(G_k): gradients of the degree-(k+1) monomials."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build(
        (SpaceTag.IRROTATIONAL.value, k),
        lambda: _gradients_of_monomials(SpaceTag.IRROTATIONAL, k),
    )


def gradient_range_basis(k: int) -> SpaceBasis:
    """Basis of R(G_k), vectors of degree k."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build(
        (SpaceTag.RANGE_G.value, k),
        lambda: _gradients_of_monomials(SpaceTag.RANGE_G, k),
    )


def curl_kernel_basis(k: int) -> SpaceBasis:
    """Basis of ker C_k, vectors of degree k+1."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build(
        (SpaceTag.KERNEL_C.value, k),
        lambda: _gradients_of_monomials(SpaceTag.KERNEL_C, k + 1),
    )


def _build_harmonic(k: int) -> SpaceBasis:
    if k == 0:
        return SpaceBasis(SpaceTag.HARMONIC, 0, tuple(_constant_fields()))
    kernel = nullspace_of(assemble_matrix(OpKind.SCALAR_LAP, k - 1).entries, mono_count(k + 1))
    vectors = tuple(grad_k(HomScalarPoly(k + 1, coords)) for coords in kernel)
    return SpaceBasis(SpaceTag.HARMONIC, k, vectors)


def harmonic_basis(k: int) -> SpaceBasis:
    """H~_k = grad ker L_{k-1}; size 2k+3."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build((SpaceTag.HARMONIC.value, k), lambda: _build_harmonic(k))


def _build_star(k: int) -> Tuple[SpaceBasis, SpaceBasis]:
    if k == 0:
        return SpaceBasis(SpaceTag.SOLENOIDAL_STAR, 0, ()), SpaceBasis(SpaceTag.IRROTATIONAL_STAR, 0, ())
    harmonic = harmonic_basis(k).vectors
    sol = solenoidal_basis(k).vectors
    irr = irrotational_basis(k).vectors
    sol_star = tuple(sol[i] for i in greedy_extension(harmonic, sol))
    irr_star = tuple(irr[i] for i in greedy_extension(harmonic, irr))
    logger.debug(f"star complements at degree {k}: {len(sol_star)} solenoidal, {len(irr_star)} irrotational")
    return (
        SpaceBasis(SpaceTag.SOLENOIDAL_STAR, k, sol_star),
        SpaceBasis(SpaceTag.IRROTATIONAL_STAR, k, irr_star),
    )


def star_complements(k: int) -> Tuple[SpaceBasis, SpaceBasis]:
    """Complements of H~_k in S~_k and in I~_k; sizes k(k+2) and k(k+1)/2."""
    _require_degree(k)
    return _SPACE_CACHE.get_or_build(("star", k), lambda: _build_star(k))


def space_basis(tag: SpaceTag, k: int) -> SpaceBasis:
    """Dispatch by tag (used by the CLI)."""
    if isinstance(tag, str):
        tag = SpaceTag(tag)
    if tag is SpaceTag.SOLENOIDAL:
        return solenoidal_basis(k)
    if tag is SpaceTag.IRROTATIONAL:
        return irrotational_basis(k)
    if tag is SpaceTag.HARMONIC:
        return harmonic_basis(k)
    if tag is SpaceTag.SOLENOIDAL_STAR:
        return star_complements(k)[0]
    if tag is SpaceTag.IRROTATIONAL_STAR:
        return star_complements(k)[1]
    if tag is SpaceTag.RANGE_G:
        return gradient_range_basis(k)
    if tag is SpaceTag.KERNEL_C:
        return curl_kernel_basis(k)
    raise ValueError(f"no closed-form basis for {tag.value}")


def intersection_basis(first: SpaceBasis, second: SpaceBasis) -> List[HomVecPoly]:
    """Basis of span(first) & span(second) from the nullspace of [first | -second]."""
    columns = first.coordinate_vectors() + [tuple(-v for v in vec) for vec in second.coordinate_vectors()]
    if not columns:
        return []
    rows = [[col[i] for col in columns] for i in range(first.ambient_dimension)]
    kernel = nullspace_of(rows, len(columns))
    return [first.combine(coords[:first.dimension]) for coords in kernel]


def solenoidal_irrotational_intersection(k: int) -> List[HomVecPoly]:
    """S~_k & I~_k, which coincides with H~_k."""
    return intersection_basis(solenoidal_basis(k), irrotational_basis(k))


def solenoidal_intersection_dimension(k: int) -> int:
    """dim(S~_k & I~_k), expected 2k+3."""
    return len(solenoidal_irrotational_intersection(k))
