"""Exception hierarchy shared by the library and the command line."""

from typing import Any, Dict, Optional

from ..constants import ExitCode


class ExhausterError(Exception):
    """
    Base exception for exhauster-related errors.

    Carries the process exit code the command line should report, plus
    optional context (file path, offending sizes) for better debugging.
    """

    exit_code: ExitCode = ExitCode.INPUT_ERROR

    def __init__(
        self,
        message: str,
        exit_code: Optional[ExitCode] = None,
        details: Optional[Dict[str, Any]] = None,
        path: Optional[str] = None,
    ):
        super().__init__(message)
        if exit_code is not None:
            self.exit_code = exit_code
        self.details = details or {}
        self.path = path

    def __str__(self) -> str:
        """Provide detailed error information for debugging."""
        base_msg = super().__str__()
        if self.path:
            base_msg += f" (File: {self.path})"
        return base_msg


class InvalidFamilyError(ExhausterError):
    """A polytope or family violates its construction invariants."""


class DimensionMismatchError(ExhausterError):
    """A direction, vertex, or sampler has the wrong length for its context."""

    def __init__(self, what: str, expected: int, actual: int):
        super().__init__(
            f"Dimension mismatch for {what}: expected {expected}, got {actual}",
            details={"expected": expected, "actual": actual},
        )
        self.expected = expected
        self.actual = actual


class SamplerModeError(ExhausterError):
    """A direction sampler is used in a mode its context does not allow."""


class FamilyFileError(ExhausterError):
    """A family file could not be read, parsed, or written."""


class CertificateShapeError(ExhausterError):
    """Two families are not an input/output pair of the combinatorial conversion."""


class CombinatorialBlowUpError(ExhausterError):
    """The converted family would contain more sets than the configured cap."""

    exit_code = ExitCode.RESOURCE_CAP

    def __init__(self, p: int, cap: int):
        super().__init__(
            f"Conversion would produce p={p} sets, exceeding the cap of {cap}. "
            "Reduce the input family or raise the cap (--cap / EXH_CAP).",
            details={"p": p, "cap": cap},
        )
        self.p = p
        self.cap = cap
