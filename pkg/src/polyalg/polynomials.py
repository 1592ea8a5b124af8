"""
Maxwell Quasi-Trefftz Toolkit - Homogeneous Polynomials
========================================================

Immutable exact-rational polynomial types:
- HomScalarPoly: homogeneous scalar polynomial of fixed degree
- HomVecPoly: 3-vector of homogeneous scalars of a common degree
- GradedVecPoly: vector polynomial of degree <= p stored by homogeneous parts
- CoefficientJet: homogeneous Taylor components of the coefficient epsilon

All polynomials live in shifted coordinates X = x - x0.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import DegenerateCoefficientError, DegreeError
from polyalg.multi_index import MultiIndex, mono_count, monomials, monomial_position
from polyalg.rational import ZERO, RationalLike, to_rational

IndexLike = Union[MultiIndex, Tuple[int, int, int]]


def _as_index(idx: IndexLike) -> MultiIndex:
    if isinstance(idx, MultiIndex):
        return idx
    return MultiIndex.from_sequence(idx)


# =============================================================================
# SCALAR
# =============================================================================

@dataclass(frozen=True)
class HomScalarPoly:
    """Homogeneous scalar polynomial; coeffs follow the canonical monomial order."""
    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise DegreeError(f"degree must be non-negative, got {self.degree}")
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if len(coeffs) != mono_count(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {mono_count(self.degree)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree: int) -> "HomScalarPoly":
        return cls(degree, (ZERO,) * mono_count(degree))

    @classmethod
    def constant(cls, value: RationalLike) -> "HomScalarPoly":
        return cls(0, (to_rational(value),))

    @classmethod
    def monomial(cls, idx: IndexLike, coef: RationalLike = 1) -> "HomScalarPoly":
        idx = _as_index(idx)
        coeffs = [ZERO] * mono_count(idx.degree())
        coeffs[monomial_position(idx)] = to_rational(coef)
        return cls(idx.degree(), tuple(coeffs))

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[IndexLike, RationalLike]) -> "HomScalarPoly":
        """Build from {multi-index: coefficient}; repeated indices accumulate."""
        coeffs = [ZERO] * mono_count(degree)
        for raw_idx, coef in terms.items():
            idx = _as_index(raw_idx)
            if idx.degree() != degree:
                raise DegreeError(f"monomial {idx} does not have degree {degree}")
            coeffs[monomial_position(idx)] += to_rational(coef)
        return cls(degree, tuple(coeffs))

    def terms(self) -> Iterator[Tuple[MultiIndex, Fraction]]:
        """Nonzero (index, coefficient) pairs in canonical order."""
        for idx, coef in zip(monomials(self.degree), self.coeffs):
            if coef:
                yield idx, coef

    def coefficient(self, idx: IndexLike) -> Fraction:
        idx = _as_index(idx)
        if idx.degree() != self.degree:
            return ZERO
        return self.coeffs[monomial_position(idx)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_degree(self, other: "HomScalarPoly"):
        if other.degree != self.degree:
            raise DegreeError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "HomScalarPoly") -> "HomScalarPoly":
        self._check_degree(other)
        return HomScalarPoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomScalarPoly") -> "HomScalarPoly":
        self._check_degree(other)
        return HomScalarPoly(self.degree, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomScalarPoly":
        return HomScalarPoly(self.degree, tuple(-a for a in self.coeffs))

    def scale(self, factor: RationalLike) -> "HomScalarPoly":
        factor = to_rational(factor)
        return HomScalarPoly(self.degree, tuple(factor * a for a in self.coeffs))

    def __mul__(self, other: "HomScalarPoly") -> "HomScalarPoly":
        return scalar_mul(self, other)

    def partial(self, axis: int) -> "HomScalarPoly":
        """Exact derivative in x_{axis+1}. Constants differentiate to the degree-0 zero."""
        if self.degree == 0:
            return HomScalarPoly.zero(0)
        coeffs = [ZERO] * mono_count(self.degree - 1)
        for idx, coef in self.terms():
            exponent = idx[axis]
            if exponent:
                coeffs[monomial_position(idx.shifted(axis, -1))] += exponent * coef
        return HomScalarPoly(self.degree - 1, tuple(coeffs))

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        x = [to_rational(v) for v in point]
        total = ZERO
        for idx, coef in self.terms():
            total += coef * x[0] ** idx.i1 * x[1] ** idx.i2 * x[2] ** idx.i3
        return total


def scalar_mul(a: HomScalarPoly, b: HomScalarPoly) -> HomScalarPoly:
    """Exact product of homogeneous scalars (degree adds)."""
    degree = a.degree + b.degree
    coeffs = [ZERO] * mono_count(degree)
    right = list(b.terms())
    for idx_a, coef_a in a.terms():
        for idx_b, coef_b in right:
            coeffs[monomial_position(idx_a.plus(idx_b))] += coef_a * coef_b
    return HomScalarPoly(degree, tuple(coeffs))


# =============================================================================
# VECTOR
# =============================================================================

@dataclass(frozen=True)
class HomVecPoly:
    """Vector field with three homogeneous components of a common degree."""
    degree: int
    components: Tuple[HomScalarPoly, HomScalarPoly, HomScalarPoly]

    def __post_init__(self):
        components = tuple(self.components)
        if len(components) != 3:
            raise ValueError(f"expected 3 components, got {len(components)}")
        for comp in components:
            if comp.degree != self.degree:
                raise DegreeError(
                    f"component of degree {comp.degree} in a degree-{self.degree} field"
                )
        object.__setattr__(self, "components", components)

    @classmethod
    def zero(cls, degree: int) -> "HomVecPoly":
        z = HomScalarPoly.zero(degree)
        return cls(degree, (z, z, z))

    @classmethod
    def from_components(cls, c1: HomScalarPoly, c2: HomScalarPoly, c3: HomScalarPoly) -> "HomVecPoly":
        return cls(c1.degree, (c1, c2, c3))

    @classmethod
    def constant(cls, values: Sequence[RationalLike]) -> "HomVecPoly":
        return cls(0, tuple(HomScalarPoly.constant(v) for v in values))

    @classmethod
    def axis_field(cls, axis: int, poly: HomScalarPoly) -> "HomVecPoly":
        """Field with `poly` in component `axis` and zeros elsewhere."""
        comps = [HomScalarPoly.zero(poly.degree)] * 3
        comps[axis] = poly
        return cls(poly.degree, tuple(comps))

    @classmethod
    def from_coordinates(cls, degree: int, coords: Sequence[RationalLike]) -> "HomVecPoly":
        """Inverse of coordinates(): component-major dense blocks."""
        n = mono_count(degree)
        if len(coords) != 3 * n:
            raise ValueError(f"degree {degree} field needs {3 * n} coordinates, got {len(coords)}")
        return cls(degree, tuple(HomScalarPoly(degree, tuple(coords[a * n:(a + 1) * n])) for a in range(3)))

    def coordinates(self) -> Tuple[Fraction, ...]:
        return self.components[0].coeffs + self.components[1].coeffs + self.components[2].coeffs

    def __getitem__(self, axis: int) -> HomScalarPoly:
        return self.components[axis]

    def is_zero(self) -> bool:
        return all(comp.is_zero() for comp in self.components)

    def __add__(self, other: "HomVecPoly") -> "HomVecPoly":
        return HomVecPoly(self.degree, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "HomVecPoly") -> "HomVecPoly":
        return HomVecPoly(self.degree, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "HomVecPoly":
        return HomVecPoly(self.degree, tuple(-a for a in self.components))

    def scale(self, factor: RationalLike) -> "HomVecPoly":
        return HomVecPoly(self.degree, tuple(a.scale(factor) for a in self.components))

    def evaluate(self, point: Sequence[RationalLike]) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(comp.evaluate(point) for comp in self.components)


def hom_mul(a: HomScalarPoly, b: HomVecPoly) -> HomVecPoly:
    """Scalar times vector, component-wise."""
    return HomVecPoly(a.degree + b.degree, tuple(scalar_mul(a, comp) for comp in b.components))


def combine_fields(degree: int, vectors: Sequence[HomVecPoly], coords: Iterable[RationalLike]) -> HomVecPoly:
    """Linear combination sum_j coords[j] * vectors[j] (zero field for no terms)."""
    total = [ZERO] * (3 * mono_count(degree))
    for vec, coef in zip(vectors, coords):
        coef = to_rational(coef)
        if not coef:
            continue
        for pos, value in enumerate(vec.coordinates()):
            if value:
                total[pos] += coef * value
    return HomVecPoly.from_coordinates(degree, total)


# =============================================================================
# GRADED
# =============================================================================

@dataclass(frozen=True)
class GradedVecPoly:
    """Vector polynomial of degree <= max_degree; parts[k] is its degree-k block."""
    max_degree: int
    parts: Tuple[HomVecPoly, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) != self.max_degree + 1:
            raise ValueError(f"max_degree {self.max_degree} needs {self.max_degree + 1} parts")
        for k, part in enumerate(parts):
            if part.degree != k:
                raise DegreeError(f"part {k} has degree {part.degree}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def zero(cls, p: int) -> "GradedVecPoly":
        return cls(p, tuple(HomVecPoly.zero(k) for k in range(p + 1)))

    @classmethod
    def from_parts(cls, parts: Sequence[HomVecPoly]) -> "GradedVecPoly":
        return cls(len(parts) - 1, tuple(parts))

    @classmethod
    def from_coordinates(cls, p: int, coords: Sequence[RationalLike]) -> "GradedVecPoly":
        parts, offset = [], 0
        for k in range(p + 1):
            size = 3 * mono_count(k)
            parts.append(HomVecPoly.from_coordinates(k, coords[offset:offset + size]))
            offset += size
        if offset != len(coords):
            raise ValueError(f"expected {offset} coordinates, got {len(coords)}")
        return cls(p, tuple(parts))

    @staticmethod
    def coordinate_count(p: int) -> int:
        return sum(3 * mono_count(k) for k in range(p + 1))

    def part(self, k: int) -> HomVecPoly:
        if k > self.max_degree:
            return HomVecPoly.zero(k)
        return self.parts[k]

    def coordinates(self) -> Tuple[Fraction, ...]:
        result: Tuple[Fraction, ...] = ()
        for part in self.parts:
            result += part.coordinates()
        return result

    def padded(self, p: int) -> "GradedVecPoly":
        """Same polynomial viewed with max_degree >= p."""
        if p <= self.max_degree:
            return self
        return GradedVecPoly(p, self.parts + tuple(HomVecPoly.zero(k) for k in range(self.max_degree + 1, p + 1)))

    def truncated(self, p: int) -> "GradedVecPoly":
        """Taylor truncation T_p."""
        if p >= self.max_degree:
            return self
        return GradedVecPoly(p, self.parts[:p + 1])

    def with_part(self, k: int, part: HomVecPoly) -> "GradedVecPoly":
        parts = list(self.parts)
        parts[k] = part
        return GradedVecPoly(self.max_degree, tuple(parts))

    def is_zero(self) -> bool:
        return all(part.is_zero() for part in self.parts)

    def _aligned(self, other: "GradedVecPoly"):
        p = max(self.max_degree, other.max_degree)
        return self.padded(p), other.padded(p), p

    def __add__(self, other: "GradedVecPoly") -> "GradedVecPoly":
        a, b, p = self._aligned(other)
        return GradedVecPoly(p, tuple(x + y for x, y in zip(a.parts, b.parts)))

    def __sub__(self, other: "GradedVecPoly") -> "GradedVecPoly":
        a, b, p = self._aligned(other)
        return GradedVecPoly(p, tuple(x - y for x, y in zip(a.parts, b.parts)))

    def __neg__(self) -> "GradedVecPoly":
        return GradedVecPoly(self.max_degree, tuple(-x for x in self.parts))

    def scale(self, factor: RationalLike) -> "GradedVecPoly":
        return GradedVecPoly(self.max_degree, tuple(x.scale(factor) for x in self.parts))

    def evaluate(self, point: Sequence[RationalLike]) -> Tuple[Fraction, Fraction, Fraction]:
        values = [ZERO, ZERO, ZERO]
        for part in self.parts:
            for axis, v in enumerate(part.evaluate(point)):
                values[axis] += v
        return tuple(values)


# =============================================================================
# COEFFICIENT JET
# =============================================================================

@dataclass(frozen=True)
class CoefficientJet:
    """Taylor components eps_0..eps_p of the coefficient at the basepoint."""
    max_degree: int
    parts: Tuple[HomScalarPoly, ...]
    basepoint: Tuple[Fraction, Fraction, Fraction] = field(default=(ZERO, ZERO, ZERO))

    def __post_init__(self):
        parts = tuple(self.parts)
        if len(parts) != self.max_degree + 1:
            raise ValueError(f"max_degree {self.max_degree} needs {self.max_degree + 1} parts")
        for k, part in enumerate(parts):
            if part.degree != k:
                raise DegreeError(f"jet component {k} has degree {part.degree}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "basepoint", tuple(to_rational(v) for v in self.basepoint))

    @classmethod
    def constant(cls, value: RationalLike, p: int = 0) -> "CoefficientJet":
        parts = [HomScalarPoly.constant(value)] + [HomScalarPoly.zero(k) for k in range(1, p + 1)]
        return cls(p, tuple(parts))

    @classmethod
    def from_parts(cls, parts: Sequence[HomScalarPoly], basepoint=(ZERO, ZERO, ZERO)) -> "CoefficientJet":
        return cls(len(parts) - 1, tuple(parts), tuple(basepoint))

    @property
    def eps0(self) -> Fraction:
        return self.parts[0].coeffs[0]

    def part(self, k: int) -> HomScalarPoly:
        if k > self.max_degree:
            return HomScalarPoly.zero(k)
        return self.parts[k]

    def require_nondegenerate(self):
        if not self.eps0:
            raise DegenerateCoefficientError("degenerate coefficient: eps_0 = 0")

    def padded(self, p: int) -> "CoefficientJet":
        """Missing components above max_degree are zero (a polynomial is its own jet)."""
        if p <= self.max_degree:
            return self
        extra = tuple(HomScalarPoly.zero(k) for k in range(self.max_degree + 1, p + 1))
        return CoefficientJet(p, self.parts + extra, self.basepoint)

    def is_constant(self) -> bool:
        return all(part.is_zero() for part in self.parts[1:])


def graded_parts_of_product(eps: CoefficientJet, Pi: GradedVecPoly, k: int) -> HomVecPoly:
    """Degree-k homogeneous component of eps * Pi."""
    if k > min(eps.max_degree, Pi.max_degree):
        raise DegreeError(
            f"component {k} exceeds available degrees (eps {eps.max_degree}, Pi {Pi.max_degree})"
        )
    total = HomVecPoly.zero(k)
    for k_prime in range(k + 1):
        factor = eps.parts[k - k_prime]
        if factor.is_zero():
            continue
        part = Pi.parts[k_prime]
        if part.is_zero():
            continue
        total = total + hom_mul(factor, part)
    return total
