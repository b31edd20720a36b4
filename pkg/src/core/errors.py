"""Error hierarchy shared by the engine, the CLI and the HTTP surface."""
from typing import Optional


class HRRError(Exception):
    """Base class; `exit_code` is what the CLI returns when it aborts on this error."""

    exit_code = 1


class ValidationError(HRRError):
    """Malformed input: schema violation, dangling reference, broken relation."""

    exit_code = 2

    def __init__(self, location: str, message: str):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}")


class UnimodularityError(HRRError):
    """Integer matrix with determinant other than ±1."""

    exit_code = 3

    def __init__(self, determinant: int):
        self.determinant = determinant
        super().__init__(
            f"determinant {determinant} is not ±1; the algebra cannot have finite global dimension"
        )


class NonAdmissibleError(HRRError):
    exit_code = 3

    def __init__(self, cap: int, surviving_length: Optional[int] = None, reason: str = ""):
        self.cap = cap
        self.surviving_length = surviving_length
        detail = reason or f"paths of length {surviving_length} survive the relations"
        super().__init__(f"ideal is not admissible within Loewy cap {cap}: {detail}")


class CapExceeded(HRRError):
    exit_code = 3

    def __init__(self, cap: int, what: str = "resolution"):
        self.cap = cap
        super().__init__(
            f"{what} did not terminate within length {cap} "
            "(infinite global dimension or cap too small)"
        )


class InvariantViolation(HRRError):
    """An internal identity that must hold did not; always a bug."""


class FieldMismatchError(HRRError, ValueError):
    pass


class AlgebraMismatchError(HRRError, ValueError):
    pass


class DimensionMismatchError(HRRError, ValueError):
    pass
