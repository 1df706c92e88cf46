"""
Symplectic Eigenvalues Module

Functions:
    - symplectic_eigenvalues: The M invariants ν_m of a covariance matrix.
    - check_covariance: Shape, symmetry and positive-definiteness checks.
"""

import numpy as np
from scipy.linalg import cholesky, eigvalsh, LinAlgError

from ..core.symplectic_form import symplectic_form
from ..exceptions import PhysicalityError, StructuralError, ToleranceError

__all__ = ['symplectic_eigenvalues', 'check_covariance', 'PAIRING_RTOL']

PAIRING_RTOL = 1e-8
SYMMETRY_RTOL = 1e-9


def check_covariance(V: np.ndarray) -> np.ndarray:
    """
    Validates the shape and symmetry of V and returns its symmetric part.

    Raises:
        StructuralError: If V is not a real square matrix of even size or is
            not symmetric.
    """
    V = np.asarray(V)
    if V.ndim != 2 or V.shape[0] != V.shape[1] or V.shape[0] % 2:
        raise StructuralError(
            f"covariance must be square of even size, got shape {V.shape}")
    if np.iscomplexobj(V) or not np.all(np.isfinite(V)):
        raise StructuralError("covariance must be real and finite")
    V = V.astype(float)
    scale = max(1.0, float(np.max(np.abs(V))))
    asym = float(np.max(np.abs(V - V.T)))
    if asym > SYMMETRY_RTOL * scale:
        raise StructuralError(
            f"covariance is not symmetric (residual {asym:.3e})", residual=asym)
    return 0.5 * (V + V.T)


def symplectic_eigenvalues(V: np.ndarray) -> np.ndarray:
    """
    Symplectic eigenvalues of a covariance matrix, sorted descending.

    They are the moduli of the eigenvalues ±iν_m of ΩV. With V = L Lᵀ the
    matrix ΩV is similar to Lᵀ Ω L, so the spectrum is read from the Hermitian
    matrix i·Lᵀ Ω L, which yields ±ν_m as exactly real pairs.

    Args:
        V (np.ndarray): Symmetric positive-definite 2M×2M matrix.

    Returns:
        np.ndarray: ν₁ ≥ … ≥ ν_M.

    Raises:
        StructuralError: If V is malformed or not symmetric.
        PhysicalityError: If V is not positive definite.
        ToleranceError: If the ±ν pairs fail to match within 1e-8.
    """
    V = check_covariance(V)
    num_modes = V.shape[0] // 2
    try:
        L = cholesky(V, lower=True)
    except LinAlgError as e:
        raise PhysicalityError(
            "covariance is not positive definite",
            violations=[{'invariant': 'positive_definite',
                         'residual': float(np.min(np.linalg.eigvalsh(V)))}]) from e
    K = L.T @ symplectic_form(num_modes) @ L
    values = eigvalsh(1j * K)
    positive = values[num_modes:][::-1]
    negative = -values[:num_modes]
    mismatch = np.abs(positive - negative)
    if np.any(mismatch > PAIRING_RTOL * np.maximum(1.0, positive)):
        raise ToleranceError(
            "symplectic eigenvalues failed to pair",
            residual=float(np.max(mismatch)), tol=PAIRING_RTOL)
    return 0.5 * (positive + negative)
