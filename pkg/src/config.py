"""
Maxwell Quasi-Trefftz Toolkit - Configuration Module
=====================================================

All constants, conventions, and settings for the library and CLI.
"""

import os
from dataclasses import dataclass, field
from typing import Optional, Tuple


# =============================================================================
# POLYNOMIAL CONVENTIONS
# =============================================================================

SPATIAL_DIMENSION = 3

# Monomials of a fixed degree are enumerated in descending lexicographic
# order of (i1, i2, i3): x1^k first, x3^k last.
MONOMIAL_ORDER = "graded-lex (i1 most significant, descending)"

# Text form of exact rationals in every JSON payload
RATIONAL_SEPARATOR = "/"


# =============================================================================
# QUASI-TREFFTZ CONVENTIONS
# =============================================================================

# Sign applied to tmp_L before the restricted vector-Laplacian solve.
# For divergence-free F: curl curl F = -Laplace F.
LAPLACE_SIGN = -1

MIN_QT_DEGREE = 3               # QT_p is only defined for p > 2
DEFAULT_BASEPOINT: Tuple[str, str, str] = ("0/1", "0/1", "0/1")

# Enumeration slot names (basis element "qt_{p}_{slot}_{index}")
SLOT_PI0 = "pi0"
SLOT_F1 = "f1"
SLOT_H1 = "h1"
SLOT_KERNEL = "ker"
SLOT_HARMONIC = "harm"


# =============================================================================
# CLI SETTINGS
# =============================================================================

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2

OUTPUT_FORMATS = ("json", "table")
DEFAULT_OUTPUT_FORMAT = "table"
JSON_INDENT = 2


# =============================================================================
# SELF-CHECK SETTINGS
# =============================================================================

@dataclass
class SelfCheckConfig:
    """Bounds for the self-check invariant suites."""

    max_k: int = 6                      # Highest degree for operator/basis suites
    max_p: int = 4                      # Highest p for enumerate-vs-oracle
    seed: int = 20240611                # Seed for random rational fields
    helmholtz_samples: int = 10         # Random fields per degree
    identity_samples: int = 5           # Random fields per degree for curl-curl identity


# Global self-check instance
SELFCHECK_CONFIG = SelfCheckConfig()


# =============================================================================
# RANDOM FIELD SETTINGS
# =============================================================================

@dataclass
class RandomFieldConfig:
    """Ranges for random rational coefficients."""

    numerator_range: Tuple[int, int] = (-9, 9)      # Inclusive
    denominator_range: Tuple[int, int] = (1, 6)     # Inclusive
    zero_probability: float = 0.2                   # Sparsity of random polynomials


# Global random field instance
RANDOM_FIELD_CONFIG = RandomFieldConfig()


# =============================================================================
# CACHE SETTINGS
# =============================================================================

CACHE_DIR_ENV = "QT_CACHE_DIR"


@dataclass
class CacheConfig:
    """Computation cache settings."""

    enabled: bool = True
    persist_dir: Optional[str] = field(
        default_factory=lambda: os.environ.get(CACHE_DIR_ENV) or None
    )


# Global cache instance
CACHE_CONFIG = CacheConfig()


# =============================================================================
# LOGGING
# =============================================================================

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_LEVEL = os.environ.get("QT_LOG_LEVEL", "WARNING")
