"""
errors.py

Exception hierarchy shared by every layer.

Library code raises these; the experiment harness converts the recoverable
ones (SingularMatrix) into flagged trial outcomes, and the CLI maps them to
exit statuses.
"""


class QMemError(Exception):
    """Base class for all library errors."""


class DomainError(QMemError, ValueError):
    """A value lies outside the domain of an operation (e.g. sigma of 0)."""


class LengthMismatch(QMemError, ValueError):
    """Two vectors (or a state and a model) disagree on length."""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} length mismatch: expected {expected}, got {actual}")


class SingularMatrix(QMemError, ArithmeticError):
    """
    Matrix inversion hit a pivot below the relative singularity threshold.

    For memory training this means the stored vectors are linearly dependent
    (typically duplicates).
    """

    def __init__(self, column: int, pivot: float, threshold: float):
        self.column = column
        self.pivot = pivot
        self.threshold = threshold
        super().__init__(
            f"matrix is singular: pivot {pivot:.3e} in column {column} "
            f"is below threshold {threshold:.3e}"
        )


class ConfigError(QMemError, ValueError):
    """Invalid experiment or environment configuration."""

    def __init__(self, reason: str, detail: str | None = None):
        self.reason = reason
        message = reason if detail is None else f"{reason}: {detail}"
        super().__init__(message)


class KernelOverflow(QMemError, ArithmeticError):
    """The kernel matrix has non-finite entries (f(1) overflows float64)."""

    def __init__(self, peak: float):
        self.peak = peak
        super().__init__(f"kernel matrix is not finite: f(1) evaluates to {peak!r}")
