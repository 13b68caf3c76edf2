"""Domain exceptions."""

from typing import Any, Dict, Optional


class FermatError(Exception):
    """Base class for every error raised by this package."""

    code = "FERMAT_ERROR"

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.field = field


class InvalidInputError(FermatError):
    """An argument violates an arithmetic precondition (zero, composite, out of range)."""

    code = "INVALID_INPUT"


class PreconditionError(FermatError):
    """A coefficient triple is not primitive or fails condition (F)."""

    code = "PRECONDITION_FAILED"


class BudgetExceededError(FermatError):
    """A bounded search needs more nodes than the configured budget."""

    code = "BUDGET_EXCEEDED"

    def __init__(self, message: str, requested: int, budget: int, progress: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.requested = requested
        self.budget = budget
        self.progress = progress or {}


class CertificateError(FermatError):
    """A certificate was requested for a target outside its hypotheses."""

    code = "CERTIFICATE_ERROR"


class TheoremViolationError(FermatError):
    """Data contradicts a proved identity; signals an implementation bug."""

    code = "THEOREM_VIOLATION"


class SoundnessError(FermatError):
    """The bounded oracle found a proper point for a certified target."""

    code = "SOUNDNESS_TRIPWIRE"


class SerializationError(FermatError):
    """A structured record could not be parsed."""

    code = "SERIALIZATION_ERROR"
