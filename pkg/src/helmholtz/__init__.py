# Maxwell Quasi-Trefftz Toolkit - Helmholtz Package
# Contains the polynomial Helmholtz decomposition

from .decomposition import HelmholtzTriple, decompose, split_sol_irr

__all__ = ["HelmholtzTriple", "decompose", "split_sol_irr"]
