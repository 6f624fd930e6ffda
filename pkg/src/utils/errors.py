"""
Error Types
===========
One hierarchy for every failure the library can raise.
Each class carries the CLI exit code it maps to.
"""


class DistminError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InputError(DistminError, ValueError):
    """Malformed or invalid input data."""

    exit_code = 1


class DegenerateCurveError(InputError):
    """Too few points, repeated consecutive points, or zero length/area."""


class SelfIntersectionError(InputError):
    """Polyline crosses itself (only raised by the strict check)."""


class GridError(InputError):
    """Grid too coarse or grids that do not match."""


class DimensionMismatchError(InputError):
    """Tensor or metric dimensions disagree."""


class SingularMetricError(InputError):
    """Metric matrix is not symmetric positive definite."""


class MalformedFileError(InputError):
    """A curve, map or fixture file could not be parsed."""


class PreconditionError(DistminError):
    """Valid input that violates an operation's precondition."""

    exit_code = 2


class RegimeError(PreconditionError):
    """Length ratio outside the regime an operation is defined for."""


class LengthMismatchError(PreconditionError):
    """Reparametrization lengths do not match the curves."""


__all__ = [
    "DistminError",
    "InputError",
    "DegenerateCurveError",
    "SelfIntersectionError",
    "GridError",
    "DimensionMismatchError",
    "SingularMetricError",
    "MalformedFileError",
    "PreconditionError",
    "RegimeError",
    "LengthMismatchError",
]
