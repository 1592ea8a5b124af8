"""
Maxwell Quasi-Trefftz Toolkit - Random Rational Fields
=======================================================

Seeded generator of random exact inputs for the self-check suites and
the tests: rationals, homogeneous scalars and fields, graded fields and
coefficient jets.
"""

from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import RANDOM_FIELD_CONFIG, RandomFieldConfig
from polyalg.multi_index import mono_count
from polyalg.polynomials import CoefficientJet, GradedVecPoly, HomScalarPoly, HomVecPoly


class RandomFieldGenerator:
    """
    Random exact polynomial data from numpy's PCG64 generator.

    The same seed always yields the same sequence of objects.
    """

    def __init__(self, seed: Optional[int] = None, config: RandomFieldConfig = RANDOM_FIELD_CONFIG):
        """
        Args:
            seed: Seed for numpy.random.default_rng
            config: Numerator/denominator ranges and sparsity
        """
        self.seed = seed
        self.config = config
        self._rng = np.random.default_rng(seed)

    def rational(self, nonzero: bool = False) -> Fraction:
        lo, hi = self.config.numerator_range
        d_lo, d_hi = self.config.denominator_range
        while True:
            numerator = int(self._rng.integers(lo, hi + 1))
            if numerator or not nonzero:
                break
        return Fraction(numerator, int(self._rng.integers(d_lo, d_hi + 1)))

    def _coefficients(self, n: int) -> Tuple[Fraction, ...]:
        mask = self._rng.random(n) >= self.config.zero_probability
        return tuple(self.rational() if keep else Fraction(0) for keep in mask)

    def scalar(self, degree: int) -> HomScalarPoly:
        return HomScalarPoly(degree, self._coefficients(mono_count(degree)))

    def vector(self, degree: int) -> HomVecPoly:
        return HomVecPoly(degree, tuple(self.scalar(degree) for _ in range(3)))

    def graded(self, p: int) -> GradedVecPoly:
        return GradedVecPoly(p, tuple(self.vector(k) for k in range(p + 1)))

    def jet(self, p: int, eps0: Optional[Fraction] = None) -> CoefficientJet:
        """Random coefficient jet; eps_0 is nonzero unless given explicitly."""
        constant = self.rational(nonzero=True) if eps0 is None else Fraction(eps0)
        parts = [HomScalarPoly.constant(constant)] + [self.scalar(k) for k in range(1, p + 1)]
        return CoefficientJet(p, tuple(parts))

    def permutation(self, n: int) -> Tuple[int, ...]:
        return tuple(int(i) for i in self._rng.permutation(n))
