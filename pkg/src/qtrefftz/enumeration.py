"""
Maxwell Quasi-Trefftz Toolkit - Basis Enumeration
==================================================

One certified basis element per free parameter: the parameter set to 1,
all others 0. Element order follows the parameter layout, independent of
the number of worker threads.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MIN_QT_DEGREE
from diffops.matrices import rank_of_vectors
from errors import ConstructionError, DegreeError
from polyalg.polynomials import CoefficientJet, GradedVecPoly
from qtrefftz.construction import construct
from qtrefftz.dimensions import dimension_formula
from qtrefftz.parameters import FreeParameters, element_name
from qtrefftz.verification import verify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QTBasisElement:
    """A constructed element with the parameters that produced it."""
    name: str
    poly: GradedVecPoly
    params: FreeParameters
    certified: bool


def coefficient_rank(polys: Sequence[GradedVecPoly], p: int) -> int:
    """Rank of the elements x monomial-coordinates matrix."""
    return rank_of_vectors([Pi.padded(p).coordinates() for Pi in polys])


def enumerate_basis(eps: CoefficientJet, p: int, jobs: int = 1) -> List[QTBasisElement]:
    """
    Certified basis of QT_p with 2p^2+6p+3 elements.

    Args:
        eps: Coefficient jet with nonzero constant term
        p: Degree, at least 3
        jobs: Worker threads for the per-element constructions

    Raises:
        ConstructionError: an element fails verification or the set is dependent
    """
    if p < MIN_QT_DEGREE:
        raise DegreeError("p must exceed 2")
    eps.require_nondegenerate()
    if eps.max_degree < p:
        logger.warning(f"coefficient jet has degree {eps.max_degree}; components up to {p} taken as zero")
        eps = eps.padded(p)

    count = FreeParameters.count_for(p)
    start = time.time()

    def build(position: int) -> QTBasisElement:
        params = FreeParameters.unit(p, position)
        name = element_name(p, position)
        poly = construct(params, eps, p)
        flags = verify(poly, eps, p)
        if not flags.passed:
            raise ConstructionError(f"{name} failed verification: {flags}")
        return QTBasisElement(name, poly, params, True)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            elements = list(executor.map(build, range(count)))
    else:
        elements = [build(position) for position in range(count)]

    expected = dimension_formula(p)
    found = coefficient_rank([e.poly for e in elements], p)
    if found != expected:
        raise ConstructionError(f"basis of QT_{p} has rank {found}, expected {expected}")

    logger.info(f"enumerated {len(elements)} certified elements of QT_{p} in {time.time() - start:.2f}s")
    return elements
