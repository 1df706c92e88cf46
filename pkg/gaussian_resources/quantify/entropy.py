"""
Entropy Module

Entropic functionals of Gaussian states, in nats.

Functions:
    - entropy_kernel: h(ν), the entropy of a thermal mode with symplectic eigenvalue ν.
    - occupation_kernel: g(n̄) = (n̄+1) log(n̄+1) − n̄ log n̄.
    - von_neumann_entropy: S(ρ) = Σ_m h(ν_m).
    - relative_entropy: S(ρ‖σ) between two Gaussian states.
    - to_log_base: Converts nats to the requested base.
"""

import numpy as np
from scipy.special import xlogy

from ..core.gaussian_state import GaussianState
from ..exceptions import InvalidParameterError, StructuralError
from ..symplectic.eigenvalues import symplectic_eigenvalues
from ..symplectic.symplectic_matrix import symplectic_inverse
from ..symplectic.williamson import williamson
from ..utils.settings_utils import DEFAULT_TOL

__all__ = [
    'PURE_NU_TOL',
    'entropy_kernel',
    'occupation_kernel',
    'von_neumann_entropy',
    'relative_entropy',
    'to_log_base',
]

PURE_NU_TOL = 1e-12


def occupation_kernel(nbar) -> np.ndarray:
    """g(n̄); g(0) = 0. Small negative round-off is clipped to zero."""
    n = np.maximum(np.asarray(nbar, dtype=float), 0.0)
    return xlogy(n + 1.0, n + 1.0) - xlogy(n, n)


def entropy_kernel(nu) -> np.ndarray:
    """h(ν) = g((ν−1)/2), exactly zero for ν ∈ [1, 1 + 1e-12]."""
    nu = np.asarray(nu, dtype=float)
    return np.where(nu <= 1.0 + PURE_NU_TOL, 0.0, occupation_kernel(0.5 * (nu - 1.0)))


def von_neumann_entropy(s: GaussianState) -> float:
    """
    Von Neumann entropy of a Gaussian state.

    Examples:
        vacuum → 0; thermal n̄ = 1 (ν = 3) → 2 log 2.
    """
    return float(np.sum(entropy_kernel(symplectic_eigenvalues(s.covariance))))


def relative_entropy(rho: GaussianState, sigma: GaussianState,
                     tol: float = DEFAULT_TOL) -> float:
    """
    Quantum relative entropy S(ρ‖σ) of two Gaussian states.

    With the Williamson form V_σ = S D Sᵀ, σ is a thermal state with
    occupations n_k = (ν_k − 1)/2 in the normal modes of S. Writing
    V' = S⁻¹ V_ρ S⁻ᵀ and d' = S⁻¹(d_ρ − d_σ), and occ_k for the mode
    occupations of (d', V'),

        S(ρ‖σ) = −S(ρ) + Σ_k [log(1 + n_k) + occ_k log(1 + 1/n_k)].

    A normal mode where σ is pure (n_k = 0) contributes nothing when
    occ_k ≤ tol and makes the relative entropy infinite otherwise.

    Args:
        rho (GaussianState): First argument.
        sigma (GaussianState): Reference state on the same mode table.
        tol (float): Tolerance on vanishing occupations.

    Returns:
        float: S(ρ‖σ) in nats, possibly ``inf``.
    """
    if rho.modes != sigma.modes:
        raise StructuralError("relative entropy needs states on the same mode table")
    decomposition = williamson(sigma.covariance, modes=sigma.modes)
    S_inv = symplectic_inverse(decomposition.S.matrix)
    V = S_inv @ rho.covariance @ S_inv.T
    d = S_inv @ (rho.displacement - sigma.displacement)
    diag = np.diag(V)
    occ = 0.25 * (diag[0::2] + diag[1::2] + 2.0 * (d[0::2] ** 2 + d[1::2] ** 2) - 2.0)
    n = 0.5 * (decomposition.nu - 1.0)

    cross = 0.0
    for n_k, occ_k in zip(n, occ):
        if n_k <= PURE_NU_TOL:
            if occ_k > tol:
                return float('inf')
            continue
        cross += np.log1p(n_k) + occ_k * np.log1p(1.0 / n_k)
    return float(max(cross - von_neumann_entropy(rho), 0.0))


def to_log_base(value: float, base: str = 'e') -> float:
    """Converts a value in nats to base 'e' or '2'."""
    if base == 'e':
        return value
    if base == '2':
        return float(value / np.log(2.0))
    raise InvalidParameterError(f"log base must be 'e' or '2', got {base!r}")
