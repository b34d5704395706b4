"""
Exception hierarchy for verbal-images.

Every error carries the CLI exit code it maps to, so the command layer can
translate exceptions without a lookup table.
"""

from typing import Any, Dict, Optional

from .constants import EXIT_CAPACITY, EXIT_USAGE, EXIT_VERIFICATION_FAILED, ERROR_CAPACITY


class VerbalImagesError(Exception):
    """Base class for all package errors."""

    exit_code = EXIT_USAGE

    def to_dict(self) -> Dict[str, Any]:
        return {
            'error': type(self).__name__,
            'message': str(self),
            'exit_code': self.exit_code,
        }


class FormatError(VerbalImagesError):
    """Malformed group, subset, target or word document."""


class WordSyntaxError(FormatError):
    """Text does not conform to the word grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class GroupValidationError(VerbalImagesError):
    """Generators or tables that do not describe a group."""


class CapacityError(VerbalImagesError):
    """A configured cap or budget would be exceeded."""

    exit_code = EXIT_CAPACITY

    def __init__(self, what: str, needed: int, cap: int):
        super().__init__(ERROR_CAPACITY.format(what=what, needed=needed, cap=cap))
        self.what = what
        self.needed = needed
        self.cap = cap

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({'what': self.what, 'needed': self.needed, 'cap': self.cap})
        return data


class HypothesisViolation(VerbalImagesError):
    """An input fails a hypothesis the construction depends on."""

    exit_code = EXIT_VERIFICATION_FAILED


class UnsupportedInputError(VerbalImagesError):
    """Input outside the range an operation is defined for (e.g. Sym(n) with n < 5)."""
