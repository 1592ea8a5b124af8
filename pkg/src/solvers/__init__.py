# Maxwell Quasi-Trefftz Toolkit - Solvers Package
# Contains right inverses of the restricted divergence and vector Laplacian

from .restricted import (
    solve_div_irrotational,
    solve_div_any,
    solve_veclap_solenoidal,
    solve_veclap_full,
    veclap_restricted_kernel,
    veclap_solenoidal_rank,
    veclap_solenoidal_kernel_dimension,
    solver_cache,
)

__all__ = [
    "solve_div_irrotational",
    "solve_div_any",
    "solve_veclap_solenoidal",
    "solve_veclap_full",
    "veclap_restricted_kernel",
    "veclap_solenoidal_rank",
    "veclap_solenoidal_kernel_dimension",
    "solver_cache",
]
