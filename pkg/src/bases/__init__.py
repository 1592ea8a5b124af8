# Maxwell Quasi-Trefftz Toolkit - Bases Package
# Contains divergence-free generators and bases of the homogeneous field spaces

from .psi import PsiLabel, psi, psi_labels, block_span
from .spaces import (
    SpaceTag,
    SpaceBasis,
    solenoidal_basis,
    irrotational_basis,
    harmonic_basis,
    star_complements,
    gradient_range_basis,
    curl_kernel_basis,
    space_basis,
    intersection_basis,
    solenoidal_irrotational_intersection,
    solenoidal_intersection_dimension,
    space_cache,
)

__all__ = [
    "PsiLabel",
    "psi",
    "psi_labels",
    "block_span",
    "SpaceTag",
    "SpaceBasis",
    "solenoidal_basis",
    "irrotational_basis",
    "harmonic_basis",
    "star_complements",
    "gradient_range_basis",
    "curl_kernel_basis",
    "space_basis",
    "intersection_basis",
    "solenoidal_irrotational_intersection",
    "solenoidal_intersection_dimension",
    "space_cache",
]
