"""
Maxwell Quasi-Trefftz Toolkit - Helper Utilities
=================================================

Formatting helpers shared by the CLI and the self-check report.
"""

from fractions import Fraction
from typing import List, Sequence

import pandas as pd

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from polyalg.polynomials import HomScalarPoly, HomVecPoly
from polyalg.rational import format_rational

_VARIABLES = ("x1", "x2", "x3")


class Helpers:
    """Utility helper functions."""

    @staticmethod
    def format_monomial(exponents: Sequence[int]) -> str:
        """x1^2*x3 style; the empty product is "1"."""
        factors = []
        for name, e in zip(_VARIABLES, exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"

    @staticmethod
    def format_scalar(poly: HomScalarPoly) -> str:
        """Human-readable homogeneous polynomial, e.g. "2*x1*x3 - 1/2*x2^2"."""
        pieces: List[str] = []
        for idx, coef in poly.terms():
            monomial = Helpers.format_monomial(idx.as_tuple())
            magnitude = abs(coef)
            if monomial == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = "-" if coef < 0 else "+"
            pieces.append(f"{sign} {body}")
        if not pieces:
            return "0"
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    @staticmethod
    def format_vector(field: HomVecPoly) -> str:
        return "(" + ", ".join(Helpers.format_scalar(c) for c in field.components) + ")"

    @staticmethod
    def matrix_frame(entries: Sequence[Sequence[Fraction]]) -> pd.DataFrame:
        """Exact matrix as a DataFrame of "num/den" strings."""
        return pd.DataFrame([[format_rational(v) for v in row] for row in entries])

    @staticmethod
    def render_table(frame: pd.DataFrame, index: bool = False) -> str:
        return frame.to_string(index=index)

    @staticmethod
    def pass_fail(flag: bool) -> str:
        return "PASS" if flag else "FAIL"

    @staticmethod
    def match_label(found: int, expected: int) -> str:
        return "MATCH" if found == expected else "MISMATCH"

    @staticmethod
    def format_duration(seconds: float) -> str:
        if seconds < 1:
            return f"{seconds * 1000:.0f}ms"
        return f"{seconds:.2f}s"

