"""
Exceptions for bcom-homology.

This module provides the structured exceptions raised across the library. Every exception
carries the process exit code the CLI maps it to.
"""

from typing import Any

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_RESOURCE_CAP = 3
EXIT_VERIFICATION = 4


class BcomError(Exception):
    """Base exception for all library errors."""

    default_exit_code: int | None = None

    def __init__(
        self,
        message: str,
        exit_code: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        """
        Initialize BcomError.

        Args:
            message: Error message
            exit_code: Process exit code the CLI should use (defaults per subclass)
            details: Structured context, e.g. the failing triple of a multiplication table
        """
        self.exit_code = exit_code if exit_code is not None else self.default_exit_code
        self.details = details
        error_msg = f"{message}"
        if self.exit_code:
            error_msg += f" (Exit Code: {self.exit_code})"
        super().__init__(error_msg)


class GroupValidationError(BcomError):
    """Raised when a multiplication table or subgroup fails validation."""

    default_exit_code = EXIT_VALIDATION


class SpecError(BcomError):
    """Raised for malformed group, tau or command-line input."""

    default_exit_code = EXIT_VALIDATION


class SimplicialError(BcomError):
    """Raised when a simplicial identity, map or diagram check fails."""

    default_exit_code = EXIT_VALIDATION


class ResourceCapError(BcomError):
    """Raised when a computation would exceed a configured resource cap."""

    default_exit_code = EXIT_RESOURCE_CAP


class VerificationError(BcomError):
    """Raised when an acceptance suite has failing checks."""

    default_exit_code = EXIT_VERIFICATION
