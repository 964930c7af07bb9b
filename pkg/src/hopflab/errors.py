"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Matrix or structure-constant shapes are inconsistent."""


class FieldMismatchError(ValueError):
    """Operands live over different base fields."""


class InvalidStructureError(ValueError):
    """An operation was given an object that fails its axiom checks.

    The offending :class:`~hopflab.report.VerificationReport` is attached
    as ``report`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed.

    Raised for conditions that are theorems for valid inputs (e.g. the
    commutator bracket of two primitives being primitive); hitting one
    means the implementation, not the input, is wrong.
    """
