"""
Maxwell Quasi-Trefftz Toolkit - Unit Tests
===========================================

Tests for multi-indices, rationals and homogeneous polynomials.
"""

import pytest
import sympy
from fractions import Fraction
import sys
import os

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from data.random_fields import RandomFieldGenerator
from errors import DegenerateCoefficientError, DegreeError, InputFormatError
from polyalg.multi_index import MultiIndex, mono_count, monomial_position, monomials, multi_index_at
from polyalg.polynomials import (
    CoefficientJet,
    GradedVecPoly,
    HomScalarPoly,
    HomVecPoly,
    combine_fields,
    graded_parts_of_product,
    hom_mul,
)
from polyalg.rational import format_rational, parse_rational, to_rational

X = sympy.symbols("x1 x2 x3")


def _as_expr(poly: HomScalarPoly):
    """sympy expression of a homogeneous scalar."""
    expr = sympy.Integer(0)
    for idx, c in poly.terms():
        e1, e2, e3 = idx.as_tuple()
        expr += sympy.Rational(c.numerator, c.denominator) * X[0] ** e1 * X[1] ** e2 * X[2] ** e3
    return expr


# =============================================================================
# FIXTURES
# =============================================================================

@pytest.fixture
def rng():
    """Seeded random field generator."""
    return RandomFieldGenerator(seed=11)


@pytest.fixture
def quadratic():
    """x1^2 - 1/2 x2 x3."""
    return HomScalarPoly.from_terms(2, {(2, 0, 0): 1, (0, 1, 1): Fraction(-1, 2)})


@pytest.fixture
def affine_jet():
    """eps = 2 + x1 with components up to degree 3."""
    return CoefficientJet.from_parts([
        HomScalarPoly.constant(2),
        HomScalarPoly.monomial((1, 0, 0)),
        HomScalarPoly.zero(2),
        HomScalarPoly.zero(3),
    ])


# =============================================================================
# MULTI-INDEX TESTS
# =============================================================================

class TestMultiIndex:
    """Tests for the canonical monomial enumeration."""

    def test_counts(self):
        """Test monomial counts for the first degrees."""
        assert [mono_count(k) for k in range(5)] == [1, 3, 6, 10, 15]

    def test_degree_two_order(self):
        """Test that x1^k leads and lex order descends."""
        expected = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
        assert [idx.as_tuple() for idx in monomials(2)] == expected

    def test_position_inverse(self):
        """Test that positions invert the enumeration."""
        for k in range(6):
            for pos, idx in enumerate(monomials(k)):
                assert monomial_position(idx) == pos
                assert multi_index_at(k, pos) == idx

    def test_shift(self):
        """Test exponent shifts and their lower bound."""
        idx = MultiIndex(1, 0, 2)
        assert idx.shifted(0, -1) == MultiIndex(0, 0, 2)
        assert idx.shifted(1, -1) is None
        assert idx.plus(MultiIndex(0, 1, 0)) == MultiIndex(1, 1, 2)

    def test_negative_degree(self):
        """Test that negative degrees are refused."""
        with pytest.raises(DegreeError):
            mono_count(-1)


# =============================================================================
# RATIONAL TESTS
# =============================================================================

class TestRational:
    """Tests for the exact rational text format."""

    def test_format_keeps_denominator(self):
        """Test that integers render with /1."""
        assert format_rational(Fraction(3)) == "3/1"
        assert format_rational(Fraction(-6, 4)) == "-3/2"

    def test_parse(self):
        """Test parsing of fractions and integers."""
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational("7") == Fraction(7)
        assert parse_rational(4) == Fraction(4)

    @pytest.mark.parametrize("text", ["1.5", "1/0", "a/b", "1/2/3", ""])
    def test_parse_rejects(self, text):
        """Test that malformed text raises with the field path."""
        with pytest.raises(InputFormatError) as info:
            parse_rational(text, "parts[0].terms[0].coef")
        assert "parts[0].terms[0].coef" in str(info.value)

    def test_float_rejected(self):
        """Test that floats never become coefficients."""
        with pytest.raises(TypeError):
            to_rational(0.5)


# =============================================================================
# HOMOGENEOUS POLYNOMIAL TESTS
# =============================================================================

class TestHomScalarPoly:
    """Tests for homogeneous scalar polynomials."""

    def test_partial(self, quadratic):
        """Test exact partial derivatives."""
        assert quadratic.partial(0) == HomScalarPoly.monomial((1, 0, 0), 2)
        assert quadratic.partial(1) == HomScalarPoly.monomial((0, 0, 1), Fraction(-1, 2))
        assert quadratic.partial(2) == HomScalarPoly.monomial((0, 1, 0), Fraction(-1, 2))

    def test_constant_derivative(self):
        """Test that constants differentiate to the degree-0 zero."""
        assert HomScalarPoly.constant(5).partial(1) == HomScalarPoly.zero(0)

    def test_product_and_evaluate(self, quadratic):
        """Test the product degree and pointwise values."""
        product = quadratic * HomScalarPoly.monomial((0, 0, 1))
        assert product.degree == 3
        point = (2, 3, Fraction(1, 3))
        assert product.evaluate(point) == quadratic.evaluate(point) * Fraction(1, 3)

    def test_degree_mismatch(self, quadratic):
        """Test that adding different degrees is refused."""
        with pytest.raises(DegreeError):
            quadratic + HomScalarPoly.zero(1)

    def test_terms_skip_zeros(self, quadratic):
        """Test that terms() lists only nonzero monomials in order."""
        assert [idx.as_tuple() for idx, _ in quadratic.terms()] == [(2, 0, 0), (0, 1, 1)]
        assert quadratic.coefficient((1, 1, 0)) == 0


class TestHomVecPoly:
    """Tests for homogeneous vector fields."""

    def test_coordinates_component_major(self):
        """Test the dense coordinate layout."""
        field = HomVecPoly.axis_field(1, HomScalarPoly.monomial((0, 0, 1)))
        coords = field.coordinates()
        assert len(coords) == 9
        assert coords[3 + 2] == 1
        assert sum(coords) == 1
        assert HomVecPoly.from_coordinates(1, coords) == field

    def test_combine_fields(self):
        """Test linear combinations of a field list."""
        e1 = HomVecPoly.constant((1, 0, 0))
        e3 = HomVecPoly.constant((0, 0, 1))
        assert combine_fields(0, [e1, e3], [2, Fraction(-1, 3)]) == HomVecPoly.constant((2, 0, Fraction(-1, 3)))
        assert combine_fields(0, [], []) == HomVecPoly.zero(0)

    def test_hom_mul(self):
        """Test scalar times field."""
        x1 = HomScalarPoly.monomial((1, 0, 0))
        product = hom_mul(x1, HomVecPoly.constant((1, 2, 3)))
        assert product.degree == 1
        assert product.evaluate((2, 0, 0)) == (2, 4, 6)

    @pytest.mark.parametrize("i,j", [(0, 1), (1, 1), (2, 0), (3, 2)])
    def test_hom_mul_bilinear(self, rng, i, j):
        """Test linearity of hom_mul in both arguments."""
        a, b = rng.scalar(i), rng.scalar(i)
        V, W = rng.vector(j), rng.vector(j)
        s = rng.rational()
        assert hom_mul(a + b, V) == hom_mul(a, V) + hom_mul(b, V)
        assert hom_mul(a, V + W) == hom_mul(a, V) + hom_mul(a, W)
        assert hom_mul(a.scale(s), V) == hom_mul(a, V).scale(s)
        assert hom_mul(a, V.scale(s)) == hom_mul(a, V).scale(s)

    @pytest.mark.parametrize("i,j,k", [(0, 1, 2), (1, 1, 1), (2, 0, 3), (3, 2, 1)])
    def test_products_associative(self, rng, i, j, k):
        """Test (a*b)*c = a*(b*c) for scalars and (a*b)*V = a*(b*V) for fields."""
        a, b, c = rng.scalar(i), rng.scalar(j), rng.scalar(k)
        V = rng.vector(k)
        assert (a * b) * c == a * (b * c)
        assert hom_mul(a * b, V) == hom_mul(a, hom_mul(b, V))
        assert a * b == b * a


# =============================================================================
# GRADED AND JET TESTS
# =============================================================================

class TestGradedVecPoly:
    """Tests for graded vector polynomials."""

    def test_coordinate_count(self):
        """Test the total number of coordinates."""
        assert GradedVecPoly.coordinate_count(3) == 60
        assert len(GradedVecPoly.zero(3).coordinates()) == 60

    def test_pad_and_truncate(self):
        """Test padding with zero parts and Taylor truncation."""
        Pi = GradedVecPoly.from_parts([HomVecPoly.constant((1, 0, 0)), HomVecPoly.zero(1)])
        padded = Pi.padded(3)
        assert padded.max_degree == 3
        assert padded.truncated(1) == Pi
        assert (padded - Pi).is_zero()


class TestCoefficientJet:
    """Tests for coefficient jets and products."""

    def test_degenerate(self):
        """Test that a vanishing constant term is rejected."""
        with pytest.raises(DegenerateCoefficientError):
            CoefficientJet.constant(0, 3).require_nondegenerate()

    def test_padding(self, affine_jet):
        """Test zero padding above the stored degree."""
        short = CoefficientJet.from_parts(list(affine_jet.parts[:2]))
        assert short.padded(3) == affine_jet
        assert not affine_jet.is_constant()

    def test_product_component(self, affine_jet):
        """Test (eps * Pi)_k against the hand-expanded product."""
        Pi = GradedVecPoly.from_parts([
            HomVecPoly.constant((1, 0, 0)),
            HomVecPoly.axis_field(1, HomScalarPoly.monomial((0, 0, 1))),
        ])
        part = graded_parts_of_product(affine_jet, Pi, 1)
        expected = HomVecPoly.from_components(
            HomScalarPoly.monomial((1, 0, 0)),
            HomScalarPoly.monomial((0, 0, 1), 2),
            HomScalarPoly.zero(1),
        )
        assert part == expected

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_product_matches_full_expansion(self, rng, p):
        """Test every (eps * Pi)_k against the expanded product of the summed polynomials."""
        eps, Pi = rng.jet(p), rng.graded(p)
        eps_expr = sum(_as_expr(part) for part in eps.parts)
        for axis in range(3):
            full = sympy.Poly(sympy.expand(eps_expr * sum(_as_expr(part[axis]) for part in Pi.parts)), *X)
            for k in range(p + 1):
                expected = {
                    exps: Fraction(int(c.p), int(c.q))
                    for exps, c in full.terms() if sum(exps) == k and c != 0
                }
                actual = {idx.as_tuple(): c for idx, c in graded_parts_of_product(eps, Pi, k)[axis].terms()}
                assert actual == expected, (axis, k)

    def test_product_out_of_range(self, affine_jet):
        """Test that a component above both degrees is refused."""
        with pytest.raises(DegreeError):
            graded_parts_of_product(affine_jet, GradedVecPoly.zero(1), 2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
