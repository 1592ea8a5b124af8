"""
Maxwell Quasi-Trefftz Toolkit - Unit Tests
===========================================

Tests for the Psi generators and the homogeneous field space bases.
"""

import pytest
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from bases.psi import PsiLabel, block_span, psi, psi_labels
from bases.spaces import (
    SpaceTag,
    curl_kernel_basis,
    gradient_range_basis,
    greedy_extension,
    harmonic_basis,
    irrotational_basis,
    solenoidal_basis,
    solenoidal_intersection_dimension,
    solenoidal_irrotational_intersection,
    space_basis,
    space_cache,
    star_complements,
)
from diffops.matrices import rank_of_vectors, span_contains
from diffops.operators import curl_k, div_k, vec_lap_k
from errors import InadmissibleLabelError
from polyalg.multi_index import MultiIndex
from polyalg.polynomials import HomScalarPoly, HomVecPoly

DEGREES = [1, 2, 3, 4]


# =============================================================================
# PSI TESTS
# =============================================================================

class TestPsi:
    """Tests for the divergence-free generators."""

    def test_family_four(self):
        """Test Psi^{1,4,(1,0,0)} = (x1, 0, -x3)."""
        field = psi(PsiLabel(1, 4, MultiIndex(1, 0, 0)))
        expected = HomVecPoly.from_components(
            HomScalarPoly.monomial((1, 0, 0)),
            HomScalarPoly.zero(1),
            HomScalarPoly.monomial((0, 0, 1), -1),
        )
        assert field == expected

    def test_family_one(self):
        """Test that family 1 is an axis field."""
        field = psi(PsiLabel(2, 1, MultiIndex(0, 1, 1)))
        assert field == HomVecPoly.axis_field(0, HomScalarPoly.monomial((0, 1, 1)))

    @pytest.mark.parametrize("family,index,message", [
        (1, (1, 0, 0), "i1 = 0"),
        (2, (0, 1, 0), "i2 = 0"),
        (3, (0, 0, 1), "i3 = 0"),
        (4, (0, 1, 0), "i1 > 0"),
        (5, (1, 0, 0), "i2 > 0"),
    ])
    def test_inadmissible(self, family, index, message):
        """Test that each family rejects its excluded labels."""
        with pytest.raises(InadmissibleLabelError, match=message):
            psi(PsiLabel(1, family, MultiIndex(*index)))

    def test_laplacian_of_quadratic_generator(self):
        """Test veclap Psi^{2,1,(0,2,0)} = 2 Psi^{0,1,(0,0,0)}."""
        field = psi(PsiLabel(2, 1, MultiIndex(0, 2, 0)))
        assert vec_lap_k(field) == psi(PsiLabel(0, 1, MultiIndex(0, 0, 0))).scale(2)

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_laplacian_block_triangular(self, k):
        """Test veclap A_j^{k+2} in A_j^k, plus A_1, A_3 for j = 4 and A_2, A_3 for j = 5."""
        allowed = {1: (1,), 2: (2,), 3: (3,), 4: (4, 1, 3), 5: (5, 2, 3)}
        for family, targets in allowed.items():
            span = [vec.coordinates() for j in targets for vec in block_span(j, k)]
            for V in block_span(family, k + 2):
                assert span_contains(span, vec_lap_k(V).coordinates()), (family, k)

    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5])
    def test_all_solenoidal(self, k):
        """Test that every generator is divergence-free."""
        labels = psi_labels(k)
        assert len(labels) == (k + 1) * (k + 3)
        assert all(div_k(psi(label)).is_zero() for label in labels)

    def test_block_sizes(self):
        """Test the sizes of the family blocks at degree 2."""
        assert [len(block_span(j, 2)) for j in range(1, 6)] == [3, 3, 3, 3, 3]


# =============================================================================
# SPACE TESTS
# =============================================================================

class TestSpaces:
    """Tests for the dimension table and the space properties."""

    @pytest.mark.parametrize("k", DEGREES)
    def test_dimensions(self, k):
        """Test the closed-form dimensions of every space."""
        sol_star, irr_star = star_complements(k)
        assert solenoidal_basis(k).dimension == (k + 1) * (k + 3)
        assert irrotational_basis(k).dimension == (k + 2) * (k + 3) // 2
        assert harmonic_basis(k).dimension == 2 * k + 3
        assert sol_star.dimension == k * (k + 2)
        assert irr_star.dimension == k * (k + 1) // 2

    @pytest.mark.parametrize("k", DEGREES)
    def test_independent(self, k):
        """Test that every basis is linearly independent."""
        sol_star, irr_star = star_complements(k)
        for basis in (solenoidal_basis(k), irrotational_basis(k), harmonic_basis(k), sol_star, irr_star):
            assert basis.certify_independent()

    @pytest.mark.parametrize("k", DEGREES)
    def test_harmonic_fields(self, k):
        """Test that harmonic fields are curl-free, divergence-free and Laplace-free."""
        for H in harmonic_basis(k).vectors:
            assert div_k(H).is_zero()
            assert curl_k(H).is_zero()
            assert vec_lap_k(H).is_zero()

    @pytest.mark.parametrize("k", DEGREES)
    def test_direct_sum(self, k):
        """Test that S*_k, I*_k and H_k together span every degree-k field."""
        sol_star, irr_star = star_complements(k)
        columns = sol_star.coordinate_vectors() + irr_star.coordinate_vectors() + harmonic_basis(k).coordinate_vectors()
        assert len(columns) == 3 * (k + 1) * (k + 2) // 2
        assert rank_of_vectors(columns) == len(columns)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_intersection_is_harmonic(self, k):
        """Test S_k & I_k = H_k."""
        intersection = solenoidal_irrotational_intersection(k)
        harm = harmonic_basis(k)
        assert len(intersection) == 2 * k + 3
        assert solenoidal_intersection_dimension(k) == 2 * k + 3
        assert all(harm.contains(vec) for vec in intersection)

    def test_degree_zero(self):
        """Test the constant fields at degree 0."""
        sol_star, irr_star = star_complements(0)
        assert harmonic_basis(0).dimension == 3
        assert sol_star.dimension == 0
        assert irr_star.dimension == 0

    def test_range_and_kernel(self):
        """Test R(G_k) and ker C_k against ranks."""
        assert gradient_range_basis(2).dimension == 10
        assert curl_kernel_basis(2).degree == 3
        assert all(curl_k(v).is_zero() for v in curl_kernel_basis(2).vectors)

    def test_membership(self):
        """Test coordinates and membership queries."""
        sol = solenoidal_basis(2)
        V = sol.combine([1] * sol.dimension)
        assert sol.contains(V)
        assert sol.combine(sol.coordinates_of(V)) == V
        gradient = HomVecPoly.from_components(
            HomScalarPoly.monomial((2, 0, 0), 3),
            HomScalarPoly.zero(2),
            HomScalarPoly.zero(2),
        )
        assert not sol.contains(gradient)

    def test_dispatch_by_tag(self):
        """Test that space_basis dispatches string tags."""
        assert space_basis("sol-star", 2) == star_complements(2)[0]
        assert space_basis(SpaceTag.HARMONIC, 1) == harmonic_basis(1)

    def test_bases_cached(self):
        """Test that a basis is built once and then served from the cache."""
        first = harmonic_basis(3)
        assert (SpaceTag.HARMONIC.value, 3) in space_cache()
        assert harmonic_basis(3) is first

    def test_greedy_extension(self):
        """Test that dependent candidates are skipped."""
        e1 = HomVecPoly.constant((1, 0, 0))
        e2 = HomVecPoly.constant((0, 1, 0))
        both = HomVecPoly.constant((1, 1, 0))
        assert greedy_extension([e1], [both, e2, e2]) == [0]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
