from typing import Any


class MFNetError(Exception):
    """Base class for all domain errors of this package."""

    def __str__(self) -> str:
        """Format this exception as a string for logging."""
        return (
            f"{self.__class__.__name__}: "
            f"{(', '.join(str(arg) for arg in self.args))} "
        )


class ContractViolationError(MFNetError):
    """Shapes, dimensions or values break the contract of a network operation."""


class PreconditionError(MFNetError):
    """A lower bound on a construction parameter is not met."""

    def __init__(self, message: str, required_minimum: float) -> None:
        """Create a new precondition error carrying the smallest admissible value."""
        super().__init__(message, f"required minimum {required_minimum:g}")
        self.required_minimum = required_minimum


class PrecisionError(PreconditionError):
    """The requested number of multiplication layers is too small."""


class EnumerationMissError(MFNetError):
    """A point lies outside every enumerated cube."""


class CubeCountError(MFNetError):
    """An enumeration exceeded its theoretical cube count."""


class TrainingDivergenceError(MFNetError):
    """Training produced a non-finite loss."""

    def __init__(self, message: str, config: Any) -> None:
        """Create a new divergence error carrying the offending configuration."""
        super().__init__(message, config)
        self.config = config


class ConfigError(MFNetError):
    """An experiment configuration file is malformed."""


class SlopeFitError(MFNetError):
    """A log-log slope cannot be fitted to the given rows."""
