"""
Maxwell Quasi-Trefftz Toolkit - Free Parameters
================================================

The free choices of the construction procedure: Pi_0, (F_1, H_1) and,
per step k = 0..p-2, the restricted vector-Laplacian kernel coordinates
and the harmonic coordinates of degree k+2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MIN_QT_DEGREE, SLOT_F1, SLOT_H1, SLOT_HARMONIC, SLOT_KERNEL, SLOT_PI0
from errors import DegreeError
from polyalg.rational import ONE, ZERO, RationalLike, to_rational

Coords = Tuple[Fraction, ...]


def parameter_slots(p: int) -> List[Tuple[str, int]]:
    """(slot name, size) in enumeration order."""
    slots = [(SLOT_PI0, 3), (SLOT_F1, 3), (SLOT_H1, 5)]
    for k in range(p - 1):
        slots.append((f"{SLOT_KERNEL}{k}", 2 * k + 5))
        slots.append((f"{SLOT_HARMONIC}{k}", 2 * k + 7))
    return slots


def _coords(values: Sequence[RationalLike], size: int, name: str) -> Coords:
    values = tuple(to_rational(v) for v in values)
    if len(values) != size:
        raise ValueError(f"slot {name} needs {size} coordinates, got {len(values)}")
    return values


@dataclass(frozen=True)
class FreeParameters:
    """Coordinates of every free choice for a degree-p construction."""
    p: int
    pi0: Coords
    f1: Coords
    h1: Coords
    kernel_coords: Tuple[Coords, ...]
    harmonic_coords: Tuple[Coords, ...]

    def __post_init__(self):
        if self.p < MIN_QT_DEGREE:
            raise DegreeError("p must exceed 2")
        object.__setattr__(self, "pi0", _coords(self.pi0, 3, SLOT_PI0))
        object.__setattr__(self, "f1", _coords(self.f1, 3, SLOT_F1))
        object.__setattr__(self, "h1", _coords(self.h1, 5, SLOT_H1))
        if len(self.kernel_coords) != self.p - 1 or len(self.harmonic_coords) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} kernel and harmonic slots")
        object.__setattr__(self, "kernel_coords", tuple(
            _coords(c, 2 * k + 5, f"{SLOT_KERNEL}{k}") for k, c in enumerate(self.kernel_coords)
        ))
        object.__setattr__(self, "harmonic_coords", tuple(
            _coords(c, 2 * k + 7, f"{SLOT_HARMONIC}{k}") for k, c in enumerate(self.harmonic_coords)
        ))

    # =========================================================================
    # CONSTRUCTORS
    # =========================================================================

    @staticmethod
    def slots(p: int) -> List[Tuple[str, int]]:
        return parameter_slots(p)

    @staticmethod
    def count_for(p: int) -> int:
        return sum(size for _, size in parameter_slots(p))

    @classmethod
    def from_flat(cls, p: int, flat: Sequence[RationalLike]) -> "FreeParameters":
        slots = parameter_slots(p)
        if len(flat) != sum(size for _, size in slots):
            raise ValueError(f"p={p} needs {cls.count_for(p)} parameters, got {len(flat)}")
        chunks, offset = [], 0
        for _, size in slots:
            chunks.append(tuple(flat[offset:offset + size]))
            offset += size
        return cls(p, chunks[0], chunks[1], chunks[2], tuple(chunks[3::2]), tuple(chunks[4::2]))

    @classmethod
    def zeros(cls, p: int) -> "FreeParameters":
        return cls.from_flat(p, [ZERO] * cls.count_for(p))

    @classmethod
    def unit(cls, p: int, position: int) -> "FreeParameters":
        """All parameters zero except the one at flat `position`."""
        flat = [ZERO] * cls.count_for(p)
        flat[position] = ONE
        return cls.from_flat(p, flat)

    # =========================================================================
    # VIEWS
    # =========================================================================

    def count(self) -> int:
        return self.count_for(self.p)

    def as_flat(self) -> Coords:
        flat = self.pi0 + self.f1 + self.h1
        for kernel, harmonic in zip(self.kernel_coords, self.harmonic_coords):
            flat += kernel + harmonic
        return flat

    def __add__(self, other: "FreeParameters") -> "FreeParameters":
        return FreeParameters.from_flat(self.p, [a + b for a, b in zip(self.as_flat(), other.as_flat())])

    def scale(self, factor: RationalLike) -> "FreeParameters":
        factor = to_rational(factor)
        return FreeParameters.from_flat(self.p, [factor * a for a in self.as_flat()])


def slot_of(p: int, position: int) -> Tuple[str, int]:
    """(slot name, index within slot) of a flat parameter position."""
    offset = 0
    for name, size in parameter_slots(p):
        if position < offset + size:
            return name, position - offset
        offset += size
    raise IndexError(f"parameter position {position} out of range for p={p}")


def element_name(p: int, position: int) -> str:
    slot, index = slot_of(p, position)
    return f"qt_{p}_{slot}_{index}"
