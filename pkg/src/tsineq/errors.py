"""Exception types shared across the package."""

from __future__ import annotations


class TsineqError(Exception):
    """Base class for all package-specific errors."""


class NotAMember(TsineqError):
    """A point failed time-scale membership after snapping."""


class DenseUnsupported(TsineqError):
    """Point enumeration was requested on a dense (interval) segment."""


class AtMaximum(TsineqError):
    """Delta derivative requested at the scale maximum with no dense neighborhood."""


class NonPositivePoint(TsineqError):
    """Conformable derivative with alpha < 1 needs t > 0."""


class SingularWeight(TsineqError):
    """The weight t^(alpha-1) is singular on the requested window."""


class QuadratureNonConvergence(TsineqError):
    """Adaptive quadrature hit the panel budget before reaching tolerance."""

    def __init__(self, message: str, best_value: float, error_estimate: float):
        super().__init__(message)
        self.best_value = best_value
        self.error_estimate = error_estimate


class ZeroDenominator(TsineqError):
    """Ratio of inequality sides is undefined because the right side is zero."""


class AllDegenerate(TsineqError):
    """Every grid point of a sharpness probe failed to evaluate."""


class ParseError(TsineqError):
    """Expression or case-file syntax error, with a byte offset."""

    def __init__(self, position: int, message: str, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = expected
        detail = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"offset {position}: {message}{detail}")


class CaseFileError(TsineqError):
    """A case file is malformed or references a missing role/field."""


class UnknownTheorem(TsineqError):
    """Theorem id is not registered in the catalogue."""
