"""
Maxwell Quasi-Trefftz Toolkit - Exact Rationals
================================================

Coefficients are fractions.Fraction values: arbitrary precision, always
in lowest terms with a positive denominator.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import RATIONAL_SEPARATOR
from errors import InputFormatError

Rational = Fraction

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an exact value to Fraction. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"inexact coefficient type {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render as "num/den"; integers keep an explicit "/1"."""
    value = Fraction(value)
    return f"{value.numerator}{RATIONAL_SEPARATOR}{value.denominator}"


def parse_rational(text: str, field_path: str = "") -> Fraction:
    """Parse "num/den" or a plain integer. Decimal notation is refused."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        raise InputFormatError(f"expected a rational string, got {text!r}", field_path)
    raw = text.strip()
    parts = raw.split(RATIONAL_SEPARATOR)
    if len(parts) not in (1, 2):
        raise InputFormatError(f"malformed rational {text!r}", field_path)
    try:
        integers = [int(part) for part in parts]
    except ValueError:
        raise InputFormatError(f"malformed rational {text!r}", field_path) from None
    if len(integers) == 1:
        return Fraction(integers[0])
    if integers[1] == 0:
        raise InputFormatError("zero denominator", field_path)
    return Fraction(integers[0], integers[1])
