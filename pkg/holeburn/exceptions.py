"""Custom exceptions for holeburn."""

from __future__ import annotations

from .const import (
    STATUS_FAILURE,
    STATUS_INVALID_PARAMETER,
    STATUS_NUMERICAL_FAILURE,
)


class HoleBurnError(Exception):
    """Base error for holeburn."""

    status: int = STATUS_FAILURE


class InvalidParameterError(HoleBurnError, ValueError):
    """Error indicating a parameter outside its domain."""

    status = STATUS_INVALID_PARAMETER


class FiltrationUndefinedError(InvalidParameterError):
    """Vacuum filtration requested on a (numerically) pure vacuum."""


class InvalidOrderError(InvalidParameterError):
    """Witness or moment order outside the supported range."""


class MissingMomentError(InvalidParameterError):
    """A moment table lacks an entry a witness needs."""


class UnknownFigureError(InvalidParameterError):
    """Figure panel id not in the reproduction table."""


class NumericalError(HoleBurnError, ArithmeticError):
    """Base error for numerical failures."""

    status = STATUS_NUMERICAL_FAILURE


class TruncationError(NumericalError):
    """No certified Fock cutoff could be found."""


class ConvergenceError(NumericalError):
    """A series did not meet its stopping rule."""


class DegenerateStateError(NumericalError):
    """Zero or unnormalized vector passed where a normalized state is required."""


class HosReadingError(NumericalError):
    """No squeezing-coefficient reading matches the quadrature oracle."""


class NormalizationRegressionError(NumericalError):
    """Amplitude-derived normalization disagrees with a closed-form constant."""
