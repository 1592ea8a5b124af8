"""
Maxwell Quasi-Trefftz Toolkit - Error Types
============================================

Exceptions raised by the library. The CLI maps them to exit codes.
"""

from typing import Optional


class QuasiTrefftzError(Exception):
    """Base class for all library errors."""


class InadmissibleLabelError(QuasiTrefftzError, ValueError):
    """A Psi label violates its family's admissibility constraint."""


class DegreeError(QuasiTrefftzError, ValueError):
    """A degree argument is outside the supported range."""


class DegenerateCoefficientError(QuasiTrefftzError, ValueError):
    """The coefficient jet has a vanishing constant term."""


class DivergenceObstructionError(QuasiTrefftzError, ValueError):
    """A right-hand side that must be solenoidal has nonzero divergence."""


class InconsistentSystemError(QuasiTrefftzError, ValueError):
    """An exact linear system has no solution."""


class ConstructionError(QuasiTrefftzError):
    """A constructed element failed certification."""


class SignConventionError(QuasiTrefftzError):
    """The Laplace sign self-test did not single out exactly one sign."""


class InputFormatError(QuasiTrefftzError, ValueError):
    """Malformed JSON input; carries the path of the offending field."""

    def __init__(self, message: str, field_path: Optional[str] = None):
        self.field_path = field_path
        if field_path:
            message = f"{field_path}: {message}"
        super().__init__(message)


class UsageError(QuasiTrefftzError, ValueError):
    """Invalid command-line arguments or paths."""
