"""
State Validation Module

Classes:
    - Violation: One violated invariant with its measured residual.
    - ValidationVerdict: Result of ``validate_state``.

Functions:
    - validate_state: Checks finiteness, symmetry and ν ≥ 1.
    - validate_moments: Same checks on raw arrays, with structural errors.
    - require_valid: Raises PhysicalityError unless the state is valid.
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ..exceptions import PhysicalityError, StructuralError
from ..utils.settings_utils import DEFAULT_TOL
from .gaussian_state import GaussianState
from .mode_table import ModeTable
from .symplectic_form import symplectic_form

__all__ = [
    'Violation',
    'ValidationVerdict',
    'validate_state',
    'validate_moments',
    'require_valid',
]


@dataclass(frozen=True)
class Violation:
    invariant: str
    residual: float
    detail: str = ''

    def to_dict(self) -> dict:
        return {'invariant': self.invariant, 'residual': self.residual,
                'detail': self.detail}


@dataclass(frozen=True)
class ValidationVerdict:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def names(self) -> List[str]:
        return [v.invariant for v in self.violations]

    def to_dict(self) -> dict:
        return {'ok': self.ok,
                'violations': [v.to_dict() for v in self.violations]}


def validate_moments(modes: ModeTable, d: np.ndarray, V: np.ndarray,
                     tol: float = DEFAULT_TOL) -> ValidationVerdict:
    """
    Checks raw moments against the invariants of a Gaussian state.

    Args:
        modes (ModeTable): Expected mode table.
        d (np.ndarray): Displacement vector.
        V (np.ndarray): Covariance matrix.
        tol (float): Tolerance on symmetry and on ν ≥ 1.

    Returns:
        ValidationVerdict: Every violated invariant with its residual.

    Raises:
        StructuralError: If the dimensions do not match 2M.
    """
    from ..symplectic.eigenvalues import symplectic_eigenvalues

    d, V = np.asarray(d, dtype=float), np.asarray(V, dtype=float)
    dim = 2 * modes.num_modes
    if d.shape != (dim,) or V.shape != (dim, dim):
        raise StructuralError(
            f"moments of shapes {d.shape} and {V.shape} do not match "
            f"{modes.num_modes} modes", expected=dim)

    violations: List[Violation] = []
    if not (np.all(np.isfinite(d)) and np.all(np.isfinite(V))):
        violations.append(Violation('finite', float('inf'),
                                    'non-finite entries in d or V'))
        return ValidationVerdict(violations)

    asym = float(np.max(np.abs(V - V.T)))
    if asym > tol:
        violations.append(Violation('symmetry', asym, '‖V − Vᵀ‖_max'))

    Vs = 0.5 * (V + V.T)
    if float(np.min(np.linalg.eigvalsh(Vs))) <= 0.0:
        hermitian = Vs + 1j * symplectic_form(modes.num_modes)
        violations.append(Violation(
            'physicality', float(-np.min(np.linalg.eigvalsh(hermitian))),
            'covariance is not positive definite'))
    else:
        nu_min = float(np.min(symplectic_eigenvalues(Vs)))
        if nu_min < 1.0 - tol:
            violations.append(Violation(
                'physicality', 1.0 - nu_min,
                f'smallest symplectic eigenvalue {nu_min:.12g} < 1'))
    return ValidationVerdict(violations)


def validate_state(s: GaussianState, tol: float = DEFAULT_TOL) -> ValidationVerdict:
    """
    Checks a state against its invariants.

    Examples:
        vacuum → ok; V = diag(0.5, 0.5) → physicality violation (ν = 0.5).
    """
    return validate_moments(s.modes, s.displacement, s.covariance, tol)


def require_valid(s: GaussianState, tol: float = DEFAULT_TOL) -> GaussianState:
    """Returns ``s`` or raises PhysicalityError listing its violations."""
    verdict = validate_state(s, tol)
    if not verdict.ok:
        raise PhysicalityError(
            f"state violates {', '.join(verdict.names)}",
            violations=[v.to_dict() for v in verdict.violations])
    return s
