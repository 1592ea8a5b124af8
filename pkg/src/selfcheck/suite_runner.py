"""
Maxwell Quasi-Trefftz Toolkit - Self-Check Runner
==================================================

Runs the invariant suites of every module and collects pass/fail results.

Suites:
- Exact sequence and rank formulas of the graded operators
- Dimension table of the homogeneous field spaces
- Helmholtz reconstruction, membership and uniqueness
- Restricted operator ranks, kernels and inverses
- Laplace sign convention
- Basis enumeration against the brute-force oracle
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import pandas as pd

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bases.spaces import (
    harmonic_basis,
    irrotational_basis,
    solenoidal_basis,
    solenoidal_intersection_dimension,
    star_complements,
)
from config import SELFCHECK_CONFIG, SelfCheckConfig
from data.random_fields import RandomFieldGenerator
from diffops.matrices import compose, rank, rank_of_vectors
from diffops.operators import OpKind, assemble_matrix, curl_curl_identity_check, div_k
from helmholtz.decomposition import decompose
from polyalg.multi_index import monomials
from polyalg.polynomials import CoefficientJet, HomScalarPoly
from qtrefftz.construction import sign_self_test
from qtrefftz.dimensions import dimension_formula
from qtrefftz.enumeration import enumerate_basis
from qtrefftz.verification import oracle_dimension
from solvers.restricted import (
    solve_div_irrotational,
    veclap_restricted_kernel,
    veclap_solenoidal_kernel_dimension,
)
from utils.helpers import Helpers

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Outcome of one suite."""
    name: str
    passed: bool = True
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0


@dataclass
class SelfCheckReport:
    """All suite results of one run."""
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "suite": s.name,
                "status": Helpers.pass_fail(s.passed),
                "checks": s.checks,
                "failures": len(s.failures),
                "elapsed": Helpers.format_duration(s.elapsed),
            }
            for s in self.suites
        ]
        return pd.DataFrame(rows, columns=["suite", "status", "checks", "failures", "elapsed"])

    def to_json(self) -> Dict:
        return {
            "all_passed": self.all_passed,
            "suites": [
                {"name": s.name, "passed": s.passed, "checks": s.checks, "failures": s.failures}
                for s in self.suites
            ],
        }


class _Checker:
    """Counts expectations and records the failing ones."""

    def __init__(self, result: SuiteResult):
        self.result = result

    def expect(self, condition: bool, message: str):
        self.result.checks += 1
        if not condition:
            self.result.passed = False
            self.result.failures.append(message)


SuiteFunction = Callable[[_Checker], None]


class SelfCheckRunner:
    """
    Runs registered suites; a suite that raises is reported as failed and
    the remaining suites still run.
    """

    def __init__(self, max_k: Optional[int] = None, max_p: Optional[int] = None,
                 seed: Optional[int] = None, config: SelfCheckConfig = SELFCHECK_CONFIG):
        """
        Args:
            max_k: Highest degree for the operator and basis suites
            max_p: Highest p for the enumerate-vs-oracle suite
            seed: Seed for random rational fields
            config: Defaults and sample counts
        """
        self.config = config
        self.max_k = config.max_k if max_k is None else max_k
        self.max_p = config.max_p if max_p is None else max_p
        self.seed = config.seed if seed is None else seed
        self.suites: Dict[str, SuiteFunction] = {}
        self._create_default_suites()

    def _create_default_suites(self):
        self.add_suite("exact_sequence", self._exact_sequence)
        self.add_suite("dimension_table", self._dimension_table)
        self.add_suite("helmholtz", self._helmholtz)
        self.add_suite("restricted_operators", self._restricted_operators)
        self.add_suite("sign_convention", self._sign_convention)
        self.add_suite("enumerate_vs_oracle", self._enumerate_vs_oracle)

    def add_suite(self, name: str, suite: SuiteFunction):
        self.suites[name] = suite

    def remove_suite(self, name: str):
        self.suites.pop(name, None)

    # =========================================================================
    # RUN
    # =========================================================================

    def run_suite(self, name: str) -> SuiteResult:
        result = SuiteResult(name)
        start = time.time()
        try:
            self.suites[name](_Checker(result))
        except Exception as e:
            logger.error(f"suite {name} raised: {e}")
            result.passed = False
            result.failures.append(f"raised {type(e).__name__}: {e}")
        result.elapsed = time.time() - start
        logger.info(f"suite {name}: {Helpers.pass_fail(result.passed)} ({result.checks} checks)")
        return result

    def run(self) -> SelfCheckReport:
        report = SelfCheckReport()
        for name in self.suites:
            report.suites.append(self.run_suite(name))
        return report

    # =========================================================================
    # SUITES
    # =========================================================================

    def _exact_sequence(self, check: _Checker):
        rng = RandomFieldGenerator(self.seed)
        for k in range(self.max_k + 1):
            G = assemble_matrix(OpKind.GRAD, k)
            D = assemble_matrix(OpKind.DIV, k)
            C = assemble_matrix(OpKind.CURL, k)
            L = assemble_matrix(OpKind.SCALAR_LAP, k)
            check.expect(rank(G) == (k + 2) * (k + 3) // 2, f"rk G_{k}")
            check.expect(rank(D) == (k + 1) * (k + 2) // 2, f"rk D_{k}")
            check.expect(rank(C) == (k + 1) * (k + 3), f"rk C_{k}")
            check.expect(rank(L) == (k + 1) * (k + 2) // 2, f"rk L_{k}")
            check.expect(D.cols - rank(D) == (k + 2) * (k + 4), f"dim ker D_{k}")
            check.expect(C.cols - rank(C) == (k + 3) * (k + 4) // 2, f"dim ker C_{k}")

            G2 = assemble_matrix(OpKind.GRAD, k + 2)
            C1 = assemble_matrix(OpKind.CURL, k + 1)
            check.expect(rank(G2) == G2.cols, f"ker G_{k + 2} = 0")
            check.expect(not any(any(row) for row in compose(C1, G2)), f"C_{k + 1} G_{k + 2} = 0")
            check.expect(rank(G2) == C1.cols - rank(C1), f"R(G_{k + 2}) = ker C_{k + 1}")
            check.expect(not any(any(row) for row in compose(D, C1)), f"D_{k} C_{k + 1} = 0")
            check.expect(rank(C1) == D.cols - rank(D), f"R(C_{k + 1}) = ker D_{k}")
            check.expect(rank(D) == D.rows, f"D_{k} surjective")
            if k > 0:
                div_veclap = compose(assemble_matrix(OpKind.DIV, k - 1), assemble_matrix(OpKind.VEC_LAP, k))
                lap_div = compose(assemble_matrix(OpKind.SCALAR_LAP, k - 1), assemble_matrix(OpKind.DIV, k + 1))
                check.expect(div_veclap == lap_div, f"D_{k - 1} veclap_{k} = L_{k - 1} D_{k + 1}")

            for _ in range(self.config.identity_samples):
                check.expect(curl_curl_identity_check(rng.vector(k + 2)), f"curl-curl identity at degree {k + 2}")

    def _dimension_table(self, check: _Checker):
        for k in range(1, self.max_k + 1):
            sol, irr, harm = solenoidal_basis(k), irrotational_basis(k), harmonic_basis(k)
            sol_star, irr_star = star_complements(k)
            check.expect(sol.dimension == (k + 1) * (k + 3), f"dim S_{k}")
            check.expect(irr.dimension == (k + 2) * (k + 3) // 2, f"dim I_{k}")
            check.expect(harm.dimension == 2 * k + 3, f"dim H_{k}")
            check.expect(sol_star.dimension == k * (k + 2), f"dim S*_{k}")
            check.expect(irr_star.dimension == k * (k + 1) // 2, f"dim I*_{k}")
            for basis in (sol, irr, harm, sol_star, irr_star):
                check.expect(basis.certify_independent(), f"{basis.space_tag.value}_{k} independent")
            check.expect(all(div_k(v).is_zero() for v in sol.vectors), f"S_{k} solenoidal")
            check.expect(solenoidal_intersection_dimension(k) == 2 * k + 3, f"S_{k} & I_{k} = H_{k}")
            concatenated = sol_star.coordinate_vectors() + irr_star.coordinate_vectors() + harm.coordinate_vectors()
            check.expect(rank_of_vectors(concatenated) == 3 * (k + 1) * (k + 2) // 2, f"S*_{k} + I*_{k} + H_{k} full")

    def _helmholtz(self, check: _Checker):
        rng = RandomFieldGenerator(self.seed + 1)
        for k in range(1, self.max_k + 1):
            for _ in range(self.config.helmholtz_samples):
                V = rng.vector(k)
                triple = decompose(V)
                check.expect(triple.reconstruct() == V, f"reconstruction at degree {k}")
                check.expect(triple.certify(), f"membership at degree {k}")
                n = sum(b.dimension for b in star_complements(k)) + harmonic_basis(k).dimension
                check.expect(decompose(V, rng.permutation(n)) == triple, f"uniqueness at degree {k}")

    def _restricted_operators(self, check: _Checker):
        for k in range(self.max_k):
            check.expect(veclap_solenoidal_kernel_dimension(k) == 4 * (k + 3), f"dim ker veclap_{k} on S_{k + 2}")
            kernel = veclap_restricted_kernel(k)
            check.expect(kernel.dimension == 2 * k + 5, f"dim ker veclap_{k} on S*_{k + 2}")
            irr_star = star_complements(k + 1)[1]
            for G in irr_star.vectors:
                check.expect(solve_div_irrotational(div_k(G)) == G, f"div inverse on I*_{k + 1}")
            for idx_poly in (HomScalarPoly.monomial(idx) for idx in monomials(k)):
                check.expect(div_k(solve_div_irrotational(idx_poly)) == idx_poly, f"div right inverse at degree {k}")

    def _sign_convention(self, check: _Checker):
        check.expect(sign_self_test() == -1, "exactly one sign passes")

    def _enumerate_vs_oracle(self, check: _Checker):
        jets = [
            CoefficientJet.constant(1, self.max_p),
            _affine_plus_bilinear_jet(self.max_p),
            RandomFieldGenerator(self.seed + 2).jet(self.max_p, eps0=2),
        ]
        for p in range(3, self.max_p + 1):
            for eps in jets:
                expected = dimension_formula(p)
                elements = enumerate_basis(eps, p)
                check.expect(len(elements) == expected, f"enumerated count at p={p}")
                check.expect(all(e.certified for e in elements), f"certified elements at p={p}")
                check.expect(oracle_dimension(eps, p) == expected, f"oracle dimension at p={p}")


def _affine_plus_bilinear_jet(p: int) -> CoefficientJet:
    """eps = 1 + x1 + x2*x3."""
    parts = [
        HomScalarPoly.constant(1),
        HomScalarPoly.monomial((1, 0, 0)),
        HomScalarPoly.monomial((0, 1, 1)),
    ] + [HomScalarPoly.zero(k) for k in range(3, p + 1)]
    return CoefficientJet.from_parts(parts)


def selfcheck(max_k: Optional[int] = None, max_p: Optional[int] = None, seed: Optional[int] = None) -> SelfCheckReport:
    """Run every suite with the given bounds."""
    return SelfCheckRunner(max_k, max_p, seed).run()
