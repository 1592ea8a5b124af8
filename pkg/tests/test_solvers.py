"""
Maxwell Quasi-Trefftz Toolkit - Unit Tests
===========================================

Tests for the restricted divergence and vector-Laplacian solvers.
"""

import pytest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from bases.spaces import solenoidal_basis, star_complements
from data.random_fields import RandomFieldGenerator
from diffops.operators import div_k, vec_lap_k
from errors import DivergenceObstructionError
from polyalg.multi_index import monomials
from polyalg.polynomials import HomScalarPoly, HomVecPoly
from solvers.restricted import (
    solve_div_any,
    solve_div_irrotational,
    solve_veclap_full,
    solve_veclap_solenoidal,
    solver_cache,
    veclap_restricted_kernel,
    veclap_solenoidal_kernel_dimension,
    veclap_solenoidal_rank,
)


# =============================================================================
# FIXTURES
# =============================================================================

@pytest.fixture
def rng():
    """Seeded random field generator."""
    return RandomFieldGenerator(seed=3)


def _random_solenoidal(rng, k):
    sol = solenoidal_basis(k)
    return sol.combine([rng.rational() for _ in range(sol.dimension)])


# =============================================================================
# DIVERGENCE TESTS
# =============================================================================

class TestDivergenceSolvers:
    """Tests for the divergence right inverses."""

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_right_inverse(self, k):
        """Test div(solve_div_irrotational(f)) = f on every monomial."""
        for idx in monomials(k):
            f = HomScalarPoly.monomial(idx)
            G = solve_div_irrotational(f)
            assert G.degree == k + 1
            assert div_k(G) == f
            assert star_complements(k + 1)[1].contains(G)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_left_inverse_on_irr_star(self, k):
        """Test that the solver inverts div on I*_{k+1}."""
        for G in star_complements(k + 1)[1].vectors:
            assert solve_div_irrotational(div_k(G)) == G

    def test_solver_reused(self):
        """Test that the factored divergence system is built once per degree."""
        solve_div_irrotational(HomScalarPoly.monomial((0, 1, 1)))
        assert ("div-irr-star", 2) in solver_cache()
        builds = solver_cache().stats.builds
        solve_div_irrotational(HomScalarPoly.monomial((2, 0, 0)))
        assert solver_cache().stats.builds == builds

    def test_zero_rhs(self):
        """Test that a zero right-hand side gives the zero field."""
        assert solve_div_irrotational(HomScalarPoly.zero(2)).is_zero()

    def test_closed_form(self, rng):
        """Test the closed-form preimage."""
        f = rng.scalar(3)
        G = solve_div_any(f)
        assert div_k(G) == f
        assert G[1].is_zero() and G[2].is_zero()


# =============================================================================
# VECTOR LAPLACIAN TESTS
# =============================================================================

class TestVecLapSolvers:
    """Tests for the vector-Laplacian right inverses."""

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_restricted_solve(self, rng, k):
        """Test vec_lap F = rhs with F in S*_{k+2}."""
        rhs = _random_solenoidal(rng, k)
        F = solve_veclap_solenoidal(rhs)
        assert vec_lap_k(F) == rhs
        assert star_complements(k + 2)[0].contains(F)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_full_solve(self, rng, k):
        """Test vec_lap F = rhs with F in the full S_{k+2}."""
        rhs = _random_solenoidal(rng, k)
        F = solve_veclap_full(rhs)
        assert vec_lap_k(F) == rhs
        assert div_k(F).is_zero()

    def test_obstruction(self):
        """Test that a non-solenoidal right-hand side is refused."""
        rhs = HomVecPoly.axis_field(0, HomScalarPoly.monomial((1, 0, 0)))
        with pytest.raises(DivergenceObstructionError, match="divergence obstruction"):
            solve_veclap_solenoidal(rhs)
        with pytest.raises(DivergenceObstructionError):
            solve_veclap_full(rhs)

    def test_constant_rhs(self):
        """Test that constants need no solenoidality check."""
        F = solve_veclap_solenoidal(HomVecPoly.constant((1, 0, 0)))
        assert vec_lap_k(F) == HomVecPoly.constant((1, 0, 0))

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_kernel_dimensions(self, k):
        """Test the kernel sizes on S*_{k+2} and on S_{k+2}."""
        kernel = veclap_restricted_kernel(k)
        assert kernel.dimension == 2 * k + 5
        assert kernel.degree == k + 2
        assert all(vec_lap_k(v).is_zero() for v in kernel.vectors)
        assert kernel.certify_independent()
        assert veclap_solenoidal_kernel_dimension(k) == 4 * (k + 3)
        assert veclap_solenoidal_rank(k) == (k + 1) * (k + 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
