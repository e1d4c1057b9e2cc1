"""Exception types shared across the package."""

from __future__ import annotations


class ParameterError(ValueError):
    """A physical or configuration parameter failed validation.

    ``key`` names the offending parameter when there is one.
    """

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


class RangeError(ValueError):
    """A requested quantity lies outside the numerically reachable range."""

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


class QuadratureError(RuntimeError):
    """Adaptive quadrature did not reach the requested accuracy."""

    def __init__(self, message: str, error_estimate: float):
        super().__init__(f"{message} (achieved error estimate {error_estimate:.3e})")
        self.error_estimate = error_estimate
