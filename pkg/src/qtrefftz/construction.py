"""
Maxwell Quasi-Trefftz Toolkit - Construction Procedure
=======================================================

Builds an element of QT_p from its free parameters by forward
substitution over the homogeneous degrees:
- Pi_0 is chosen
- Pi_1 = F_1 + G_1 + H_1 with G_1 fixed by the degree-0 divergence condition
- for k = 0..p-2, Pi_{k+2} = F_{k+2} + G_{k+2} + H_{k+2} where G_{k+2} solves
  the divergence condition and F_{k+2} the curl-curl condition

The curl-curl condition is imposed through the vector Laplacian: for a
divergence-free F, curl curl F = LAPLACE_SIGN * vec_lap F.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bases.spaces import harmonic_basis, star_complements
from config import LAPLACE_SIGN, MIN_QT_DEGREE
from diffops.operators import curl_curl, div_k
from errors import ConstructionError, DegreeError, SignConventionError
from polyalg.polynomials import (
    CoefficientJet,
    GradedVecPoly,
    HomScalarPoly,
    HomVecPoly,
    graded_parts_of_product,
)
from solvers.restricted import (
    solve_div_any,
    solve_div_irrotational,
    solve_veclap_full,
    solve_veclap_solenoidal,
    veclap_restricted_kernel,
)
from qtrefftz.parameters import FreeParameters
from qtrefftz.verification import verify

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstructionStep:
    """Right-hand sides used at step k (Pi_{k+2} is being determined)."""
    k: int
    tmp_D: HomScalarPoly
    tmp_L: HomVecPoly


def _prepare(params: FreeParameters, eps: CoefficientJet, p: int) -> CoefficientJet:
    if p < MIN_QT_DEGREE:
        raise DegreeError("p must exceed 2")
    eps.require_nondegenerate()
    if params.p != p:
        raise ValueError(f"parameters were laid out for p={params.p}, not p={p}")
    if eps.max_degree < p:
        logger.debug(f"coefficient jet of degree {eps.max_degree} padded with zeros to {p}")
    return eps.padded(p)


def _divergence_rhs(eps: CoefficientJet, Pi: GradedVecPoly, degree: int, inv_eps0: Fraction) -> HomScalarPoly:
    """-div((eps Pi)_degree) / eps_0 while Pi_degree is still zero."""
    return div_k(graded_parts_of_product(eps, Pi, degree)).scale(-inv_eps0)


def _first_two_parts(params: FreeParameters, eps: CoefficientJet, p: int, inv_eps0: Fraction) -> GradedVecPoly:
    Pi = GradedVecPoly.zero(p).with_part(0, HomVecPoly.constant(params.pi0))
    G1 = solve_div_irrotational(_divergence_rhs(eps, Pi, 1, inv_eps0))
    F1 = star_complements(1)[0].combine(params.f1)
    H1 = harmonic_basis(1).combine(params.h1)
    return Pi.with_part(1, F1 + G1 + H1)


def construct(
    params: FreeParameters,
    eps: CoefficientJet,
    p: int,
    sign: int = LAPLACE_SIGN,
    certify: bool = False,
    trace: Optional[List[ConstructionStep]] = None,
) -> GradedVecPoly:
    """
    Build the element of QT_p selected by `params`.

    Args:
        params: Free parameters laid out for degree p
        eps: Coefficient jet with nonzero constant term
        p: Polynomial degree, at least 3
        sign: Factor applied to tmp_L before the vector-Laplacian solve
        certify: Run verify() and raise ConstructionError on failure
        trace: If given, receives one ConstructionStep per k

    Returns:
        GradedVecPoly of max_degree p
    """
    eps = _prepare(params, eps, p)
    inv_eps0 = 1 / eps.eps0
    Pi = _first_two_parts(params, eps, p, inv_eps0)

    for k in range(p - 1):
        tmp_D = _divergence_rhs(eps, Pi, k + 2, inv_eps0)
        tmp_L = graded_parts_of_product(eps, Pi, k)
        if trace is not None:
            trace.append(ConstructionStep(k, tmp_D, tmp_L))

        G = solve_div_irrotational(tmp_D)
        F = solve_veclap_solenoidal(tmp_L.scale(sign))
        F = F + veclap_restricted_kernel(k).combine(params.kernel_coords[k])
        H = harmonic_basis(k + 2).combine(params.harmonic_coords[k])
        Pi = Pi.with_part(k + 2, F + G + H)

    if certify:
        flags = verify(Pi, eps, p)
        if not flags.passed:
            raise ConstructionError(f"constructed polynomial failed verification: {flags}")
    return Pi


def construct_single_step(
    params: FreeParameters,
    eps: CoefficientJet,
    p: int,
    sign: int = LAPLACE_SIGN,
) -> GradedVecPoly:
    """
    Same degrees 0 and 1 as construct(); each later part is one preimage pair.

    G_{k+2} is the closed-form divergence preimage and F_{k+2} is solved in
    the full solenoidal space. The closed-form G is not curl-free, so its
    curl-curl image is moved to the right-hand side. Kernel and harmonic
    slots of `params` are not used.
    """
    eps = _prepare(params, eps, p)
    inv_eps0 = 1 / eps.eps0
    Pi = _first_two_parts(params, eps, p, inv_eps0)

    for k in range(p - 1):
        tmp_D = _divergence_rhs(eps, Pi, k + 2, inv_eps0)
        tmp_L = graded_parts_of_product(eps, Pi, k)
        G = solve_div_any(tmp_D)
        F = solve_veclap_full((tmp_L - curl_curl(G)).scale(sign))
        Pi = Pi.with_part(k + 2, F + G)
    return Pi


def sign_self_test() -> int:
    """
    Construct the Pi_0 = (1,0,0) element for eps = 1, p = 3 with both signs.

    Returns the sign that passes verification; raises SignConventionError
    unless exactly one sign passes and it is the configured one.
    """
    p = MIN_QT_DEGREE
    eps = CoefficientJet.constant(1, p)
    params = FreeParameters.unit(p, 0)
    passing = []
    for sign in (1, -1):
        flags = verify(construct(params, eps, p, sign=sign), eps, p)
        logger.debug(f"sign {sign:+d}: {flags}")
        if flags.passed:
            passing.append(sign)
    if len(passing) != 1:
        raise SignConventionError(f"expected exactly one passing sign, got {passing}")
    if passing[0] != LAPLACE_SIGN:
        raise SignConventionError(f"configured sign {LAPLACE_SIGN} fails, {passing[0]} passes")
    return passing[0]
