"""
Maxwell Quasi-Trefftz Toolkit - Multi-Indices
==============================================

Exponent triples and the canonical enumeration of monomials of a fixed
degree. Every dense coefficient vector in the library is indexed by
the order produced here.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import DegreeError


@dataclass(frozen=True)
class MultiIndex:
    """Exponent triple (i1, i2, i3) of the monomial x1^i1 x2^i2 x3^i3."""
    i1: int
    i2: int
    i3: int

    def __post_init__(self):
        if min(self.i1, self.i2, self.i3) < 0:
            raise ValueError(f"negative exponent in {self.as_tuple()}")

    @classmethod
    def from_sequence(cls, values) -> "MultiIndex":
        i1, i2, i3 = (int(v) for v in values)
        return cls(i1, i2, i3)

    def degree(self) -> int:
        return self.i1 + self.i2 + self.i3

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.i1, self.i2, self.i3)

    def __getitem__(self, axis: int) -> int:
        return self.as_tuple()[axis]

    def shifted(self, axis: int, amount: int) -> Optional["MultiIndex"]:
        """Add `amount` to exponent `axis`; None if it would go negative."""
        values = list(self.as_tuple())
        values[axis] += amount
        if values[axis] < 0:
            return None
        return MultiIndex(*values)

    def plus(self, other: "MultiIndex") -> "MultiIndex":
        return MultiIndex(self.i1 + other.i1, self.i2 + other.i2, self.i3 + other.i3)

    def __str__(self) -> str:
        return f"({self.i1},{self.i2},{self.i3})"


def mono_count(k: int) -> int:
    """Number of monomials of degree k in three variables."""
    if k < 0:
        raise DegreeError(f"degree must be non-negative, got {k}")
    return (k + 1) * (k + 2) // 2


@lru_cache(maxsize=None)
def monomials(k: int) -> Tuple[MultiIndex, ...]:
    """Canonical enumeration of {i : |i| = k}."""
    if k < 0:
        raise DegreeError(f"degree must be non-negative, got {k}")
    result = []
    for i1 in range(k, -1, -1):
        for i2 in range(k - i1, -1, -1):
            result.append(MultiIndex(i1, i2, k - i1 - i2))
    return tuple(result)


@lru_cache(maxsize=None)
def _positions(k: int) -> Dict[MultiIndex, int]:
    return {idx: pos for pos, idx in enumerate(monomials(k))}


def monomial_position(idx: MultiIndex) -> int:
    """Position of `idx` within the canonical enumeration of its degree."""
    return _positions(idx.degree())[idx]


def multi_index_at(k: int, pos: int) -> MultiIndex:
    """Inverse of monomial_position."""
    return monomials(k)[pos]
