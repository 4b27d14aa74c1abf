"""Defines exceptions raised by coupledtops numerical kernels, dynamics and experiments."""

# Licensed under the MIT. You may obtain a copy at https://opensource.org/licenses/MIT.

from typing import Optional, Sequence, Tuple


class NotHermitian(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Matrix is not Hermitian: {msg}")


class NotUnitary(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Matrix is not unitary: {msg}")


class NoConvergence(ArithmeticError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Iteration did not converge: {msg}")


class DomainError(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Argument outside the function domain: {msg}")


class DimensionMismatch(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Dimension mismatch: {msg}")


class DimensionTooLarge(MemoryError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Dimension too large: {msg}")


class WeightOutOfRange(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Mixture weight must lie in [0, 1]: {msg}")


class EmptyInput(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Empty input: {msg}")


class InvalidParameterValue(ValueError):
    def __init__(self, msg: str) -> None:
        super().__init__(f"Invalid parameter value: {msg}")


class ConfigParseError(ValueError):
    """Raised by `validate_config` with every violation found, not just the first.

    Each violation is a (field path, message) pair. JSON syntax errors are reported with the field path
    `line L, column C`.
    """

    def __init__(self, source: str, violations: Sequence[Tuple[str, str]]) -> None:
        self.source = source
        self.violations = list(violations)
        listing = "\n".join(f"  - {field}: {message}" for field, message in self.violations)
        super().__init__(f"Invalid experiment config {source} ({len(self.violations)} problem(s)):\n{listing}")


class ExperimentIOError(IOError):
    def __init__(self, msg: str, cause: Optional[OSError] = None) -> None:
        self.cause = cause
        suffix = f" ({cause})" if cause is not None else ""
        super().__init__(f"Experiment IO error: {msg}{suffix}")
