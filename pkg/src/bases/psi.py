"""
Maxwell Quasi-Trefftz Toolkit - Divergence-Free Generators
===========================================================

The five closed-form families Psi^{k,j,i} spanning the homogeneous
solenoidal fields of degree k.
"""

from dataclasses import dataclass
from typing import List, Tuple

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import InadmissibleLabelError
from polyalg.multi_index import MultiIndex, monomials
from polyalg.polynomials import HomScalarPoly, HomVecPoly

PSI_FAMILIES = (1, 2, 3, 4, 5)

# family -> (exponent axis, required relation, readable constraint)
_ADMISSIBILITY = {
    1: (0, "zero", "family 1 requires i1 = 0"),
    2: (1, "zero", "family 2 requires i2 = 0"),
    3: (2, "zero", "family 3 requires i3 = 0"),
    4: (0, "positive", "family 4 requires i1 > 0"),
    5: (1, "positive", "family 5 requires i2 > 0"),
}


@dataclass(frozen=True)
class PsiLabel:
    """Label (k, j, i) of a divergence-free generator."""
    degree: int
    family: int
    index: MultiIndex

    def violation(self) -> str:
        """Empty string when admissible, otherwise the violated constraint."""
        if self.family not in _ADMISSIBILITY:
            return f"family must be one of {PSI_FAMILIES}, got {self.family}"
        if self.index.degree() != self.degree:
            return f"|i| = {self.index.degree()} must equal the degree {self.degree}"
        axis, relation, message = _ADMISSIBILITY[self.family]
        exponent = self.index[axis]
        if relation == "zero" and exponent != 0:
            return message
        if relation == "positive" and exponent <= 0:
            return message
        return ""

    def is_admissible(self) -> bool:
        return not self.violation()

    def validate(self):
        problem = self.violation()
        if problem:
            raise InadmissibleLabelError(f"inadmissible label {self}: {problem}")

    def __str__(self) -> str:
        return f"Psi^{{{self.degree},{self.family},{self.index}}}"


def psi(label: PsiLabel) -> HomVecPoly:
    """Evaluate the generator named by `label`."""
    label.validate()
    i = label.index
    j = label.family
    if j in (1, 2, 3):
        return HomVecPoly.axis_field(j - 1, HomScalarPoly.monomial(i))
    # families 4 and 5 pair a component with a compensating x3 term
    axis = j - 4
    first = HomScalarPoly.monomial(i, i.i3 + 1)
    third = HomScalarPoly.monomial(i.shifted(axis, -1).shifted(2, 1), -i[axis])
    comps = [HomScalarPoly.zero(label.degree)] * 3
    comps[axis] = first
    comps[2] = third
    return HomVecPoly(label.degree, tuple(comps))


def psi_labels(k: int, family: int = 0) -> Tuple[PsiLabel, ...]:
    """Admissible labels of degree k, families ascending then canonical index order."""
    families = (family,) if family else PSI_FAMILIES
    labels = []
    for j in families:
        for idx in monomials(k):
            label = PsiLabel(k, j, idx)
            if label.is_admissible():
                labels.append(label)
    return tuple(labels)


def block_span(family: int, k: int) -> List[HomVecPoly]:
    """Generators of A_j^k, the span of one Psi family at degree k."""
    return [psi(label) for label in psi_labels(k, family)]
