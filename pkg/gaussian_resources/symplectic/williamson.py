"""
Williamson Decomposition Module

Every positive-definite covariance matrix factors as V = S D Sᵀ with S
symplectic and D = diag(ν₁, ν₁, …, ν_M, ν_M).

Classes:
    - WilliamsonResult: The factors and their residuals.

Functions:
    - williamson: Computes the decomposition.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import eigh, schur

from ..core.mode_table import ModeTable
from ..core.symplectic_form import symplectic_form
from ..exceptions import PhysicalityError, ToleranceError
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL
from .eigenvalues import check_covariance
from .symplectic_matrix import SymplecticMatrix, symplectic_residual

__all__ = ['WilliamsonResult', 'williamson']

logger = logger_utility.logger


@dataclass(frozen=True, eq=False)
class WilliamsonResult:
    """
    Attributes:
        S (SymplecticMatrix): Symplectic factor.
        nu (np.ndarray): Symplectic eigenvalues, sorted descending.
        residual (float): ‖S D Sᵀ − V‖_max.
        symplectic_residual (float): ‖S Ω Sᵀ − Ω‖_max.
    """
    S: SymplecticMatrix
    nu: np.ndarray
    residual: float
    symplectic_residual: float

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(np.repeat(self.nu, 2))

    def to_dict(self) -> dict:
        return {
            'nu': self.nu.tolist(),
            'S': self.S.matrix.tolist(),
            'residual': self.residual,
            'symplectic_residual': self.symplectic_residual,
        }


def _rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def williamson(V: np.ndarray, tol: float = DEFAULT_TOL,
               modes: Optional[ModeTable] = None) -> WilliamsonResult:
    """
    Williamson normal form of a covariance matrix.

    S = V^{1/2} O D^{−1/2}, where the real Schur form of the antisymmetric
    matrix V^{1/2} Ω V^{1/2} = O (⊕ ν_m Ω₁) Oᵀ supplies O and ν. The U(1)
    freedom of each block column pair is fixed by rotating row 2m of the pair
    to (r, 0) with r ≥ 0.

    Args:
        V (np.ndarray): Symmetric positive-definite covariance matrix.
        tol (float): Residual tolerance, scaled by max(1, ‖V‖_max).
        modes (ModeTable, optional): Table attached to S; single frequency
            when omitted.

    Returns:
        WilliamsonResult: Factors with ν sorted descending.

    Raises:
        StructuralError: If V is malformed or not symmetric.
        PhysicalityError: If V is not positive definite.
        ToleranceError: If a residual exceeds its tolerance.
    """
    V = check_covariance(V)
    num_modes = V.shape[0] // 2
    modes = modes or ModeTable.single_frequency(num_modes)
    omega = symplectic_form(num_modes)

    w, Q = eigh(V)
    if w[0] <= 0.0:
        raise PhysicalityError(
            "covariance is not positive definite",
            violations=[{'invariant': 'positive_definite', 'residual': float(w[0])}])
    sqrt_V = (Q * np.sqrt(w)) @ Q.T

    A = sqrt_V @ omega @ sqrt_V
    A = 0.5 * (A - A.T)
    T, O = schur(A, output='real')

    nu = np.empty(num_modes)
    for k in range(num_modes):
        b = T[2 * k, 2 * k + 1]
        if b < 0:
            O[:, [2 * k, 2 * k + 1]] = O[:, [2 * k + 1, 2 * k]]
            b = -b
        nu[k] = b

    S = sqrt_V @ O @ np.diag(np.repeat(1.0 / np.sqrt(nu), 2))

    order = np.argsort(-nu, kind='stable')
    nu = nu[order]
    columns = np.stack([2 * order, 2 * order + 1], axis=1).reshape(-1)
    S = S[:, columns]

    scale = float(np.max(np.abs(S)))
    for k in range(num_modes):
        pair = S[:, 2 * k:2 * k + 2]
        row = 2 * k
        if np.hypot(*pair[row]) < 1e-12 * scale:
            row = int(np.argmax(np.sum(pair ** 2, axis=1)))
        x, y = pair[row]
        S[:, 2 * k:2 * k + 2] = pair @ _rotation(np.arctan2(y, x))

    residual = float(np.max(np.abs(S @ np.diag(np.repeat(nu, 2)) @ S.T - V)))
    sym_residual = symplectic_residual(S)
    logger.debug(f"williamson: M={num_modes}, residual={residual:.3e}, "
                 f"symplectic residual={sym_residual:.3e}")

    v_scale = max(1.0, float(np.max(np.abs(V))))
    if residual > tol * v_scale:
        raise ToleranceError(
            f"Williamson reconstruction residual {residual:.3e} exceeds tolerance",
            residual=residual, tol=tol * v_scale)
    if sym_residual > tol * max(1.0, scale ** 2):
        raise ToleranceError(
            f"Williamson factor not symplectic (residual {sym_residual:.3e})",
            residual=sym_residual, tol=tol * max(1.0, scale ** 2))

    return WilliamsonResult(SymplecticMatrix(S, modes), nu, residual, sym_residual)
