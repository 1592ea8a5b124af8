"""
Maxwell Quasi-Trefftz Toolkit - Dimension Formulas
===================================================

Closed-form dimensions and the comparison tables printed by the CLI.
"""

from typing import Optional

import pandas as pd

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import MIN_QT_DEGREE
from errors import DegreeError


def dimension_formula(p: int) -> int:
    """dim QT_p = 2p^2 + 6p + 3."""
    if p < MIN_QT_DEGREE:
        raise DegreeError("p must exceed 2")
    return 2 * p * p + 6 * p + 3


def pw_dimension(p: int) -> int:
    """Plane-wave space for the second-order curl-curl equation: 2(p+3)(p+1)."""
    return 2 * (p + 3) * (p + 1)


def curlcurl_only_formula(p: int) -> int:
    """Measured dimension when only the curl-curl residual is imposed."""
    return 3 * (p + 1) ** 2


def pw_comparison_table(p: int, p_min: Optional[int] = None) -> pd.DataFrame:
    """Rows (p, plane-wave dimension, quasi-Trefftz dimension) for p_min..p."""
    if p < 1:
        raise DegreeError(f"p must be positive, got {p}")
    first = p if p_min is None else max(1, p_min)
    rows = [
        {"p": q, "pw_dimension": pw_dimension(q), "qt_dimension": 2 * q * q + 6 * q + 3}
        for q in range(first, p + 1)
    ]
    return pd.DataFrame(rows, columns=["p", "pw_dimension", "qt_dimension"])


def scalar_dimension_table(p: int) -> pd.DataFrame:
    """dim P_p against scalar quasi-Trefftz dimensions for operator orders 2 and 3."""
    if p < 1:
        raise DegreeError(f"p must be positive, got {p}")
    rows = {
        "P_p": ((p + 1) * (p + 2) // 2, (p + 1) * (p + 2) * (p + 3) // 6),
        "QT_p (gamma=2)": (2 * p + 1, (p + 1) ** 2),
        "QT_p (gamma=3)": (3 * p, (3 * p * p + 3 * p + 2) // 2),
    }
    return pd.DataFrame.from_dict(rows, orient="index", columns=["d=2", "d=3"])
