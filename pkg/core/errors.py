"""wildcount exception hierarchy"""

from typing import Optional, Tuple


class WildcountError(Exception):
    """Base class for all wildcount errors"""


class SpecValidationError(WildcountError, ValueError):
    """A Lie algebra specification violates one of its axioms"""

    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        self.witness = tuple(witness)
        if self.witness:
            message = f"{message} (witness indices {self.witness})"
        super().__init__(message)


class ScaleGuardError(WildcountError, ValueError):
    """An enumeration would exceed its configured size guard"""

    def __init__(self, what: str, required: int, limit: int):
        self.required = required
        self.limit = limit
        super().__init__(
            f"{what} too large: requires {required} enumeration steps, guard is {limit} "
            f"(raise WILDCOUNT_SCALE_GUARD to override)"
        )


class DatumError(WildcountError, ValueError):
    """Malformed local datum or algebra input"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(WildcountError, AssertionError):
    """Two independent computations disagree"""
