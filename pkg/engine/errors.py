"""
Exception hierarchy shared by every package.

Each class carries the CLI exit code it maps to.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all errors raised by the engine."""

    exit_code: int = 3


class InputError(EngineError, ValueError):
    """The caller supplied something invalid."""

    exit_code = 2


class DescriptorError(InputError):
    pass


class ConfigError(InputError):
    pass


class CartanError(InputError):
    """The grading element does not lie in the standard Cartan of k_C."""


class GradingError(InputError):
    """ad(x) is not diagonalizable with integer eigenvalues."""


class PreconditionError(InputError):
    pass


class DegreeBoundError(InputError):
    """Not enough generators were found below the degree bound."""


class ConsistencyError(EngineError):
    """An internal invariant failed."""

    exit_code = 3


class VerificationError(EngineError):
    exit_code = 1


class StageError(EngineError):
    """
    Wraps an error raised while running one pipeline stage so the
    failing stage can be reported.
    """

    def __init__(self, stage: str, cause: EngineError) -> None:
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
        self.exit_code = cause.exit_code
