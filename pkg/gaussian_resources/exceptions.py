"""
Exceptions Module

This module defines the exception hierarchy raised by the toolkit. Every
exception carries an ``exit_code`` used by the command-line front-end and a
``details`` mapping that is serialised into the machine-readable error report.

Classes:
    - GaussianResourceError: Root of the hierarchy.
    - StructuralError: Shapes, indices, mode tables or files are malformed.
    - InvalidParameterError: A scalar parameter is out of its domain.
    - PhysicalityError: A covariance matrix violates symmetry or ν ≥ 1.
    - NotSymplecticError: A matrix fails S Ω Sᵀ = Ω.
    - NotUnitaryError: A complex matrix fails U†U = I.
    - CrossFrequencyError: A transformation mixes different frequencies.
    - NotCompletelyPositiveError: A channel fails the complete-positivity test.
    - PreconditionError: A maximiser hypothesis does not hold for the input.
    - NotComputableError: No closed form exists for the requested quantity.
    - ToleranceError: A decomposition residual exceeded its tolerance.
"""

from typing import Any, Dict, List, Optional

__all__ = [
    'GaussianResourceError',
    'StructuralError',
    'InvalidParameterError',
    'PhysicalityError',
    'NotSymplecticError',
    'NotUnitaryError',
    'CrossFrequencyError',
    'NotCompletelyPositiveError',
    'PreconditionError',
    'NotComputableError',
    'ToleranceError',
]


class GaussianResourceError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form used on the CLI error stream."""
        payload = {
            'error': self.__class__.__name__,
            'message': self.message,
            'exit_code': self.exit_code,
        }
        payload.update(self.details)
        return payload


class StructuralError(GaussianResourceError, ValueError):
    exit_code = 1


class InvalidParameterError(GaussianResourceError, ValueError):
    exit_code = 1


class PhysicalityError(GaussianResourceError, ValueError):
    """Raised when a state violates one of its physical invariants.

    Args:
        message (str): Human readable summary.
        violations (List[Dict[str, Any]], optional): Each violated invariant
            with its measured residual.
    """
    exit_code = 2

    def __init__(self, message: str,
                 violations: Optional[List[Dict[str, Any]]] = None,
                 **details: Any):
        super().__init__(message, violations=violations or [], **details)
        self.violations = violations or []


class NotSymplecticError(GaussianResourceError, ValueError):
    exit_code = 2


class NotUnitaryError(GaussianResourceError, ValueError):
    exit_code = 2


class CrossFrequencyError(GaussianResourceError, ValueError):
    exit_code = 2


class NotCompletelyPositiveError(GaussianResourceError, ValueError):
    """Raised when a channel fails N + i(Ω − TΩTᵀ) ⪰ 0.

    The offending most negative eigenvalue, and for incoherent channels the
    smallest admissible noise weights, are carried in ``details``.
    """
    exit_code = 2


class PreconditionError(GaussianResourceError, ValueError):
    exit_code = 2


class NotComputableError(GaussianResourceError):
    exit_code = 2


class ToleranceError(GaussianResourceError, ArithmeticError):
    """Raised when a numerical residual exceeds the requested tolerance.

    Args:
        message (str): Human readable summary.
        residual (float): The residual actually achieved.
        tol (float): The tolerance that was requested.
    """
    exit_code = 3

    def __init__(self, message: str, residual: float = float('nan'),
                 tol: float = float('nan'), **details: Any):
        super().__init__(message, residual=residual, tol=tol, **details)
        self.residual = residual
        self.tol = tol
