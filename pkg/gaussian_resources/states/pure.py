"""
Pure States Module

Coherent, squeezed-vacuum and two-mode squeezed vacuum states, plus single-
mode squeezed thermal states.

Functions:
    - coherent_state: d = √2 (Re α, Im α) per mode, V = I.
    - squeezed_vacuum: Per-mode squeezing r and phase θ; n̄ = sinh² r.
    - squeezed_thermal_state: (2n̄+1) R(θ/2) Z(2r) R(θ/2)ᵀ on one mode.
    - two_mode_squeezed_vacuum: TMSV on a pair of modes.
    - pure_state_factory: Dispatches on the PURE_STATES registry.
"""

from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable, quadrature_indices
from ..exceptions import CrossFrequencyError, InvalidParameterError, StructuralError

__all__ = [
    'coherent_state',
    'squeezed_vacuum',
    'squeezed_thermal_state',
    'two_mode_squeezed_vacuum',
    'pure_state_factory',
    'PURE_STATES',
]


def _per_mode(values, modes: ModeTable, name: str) -> np.ndarray:
    try:
        arr = np.broadcast_to(np.asarray(values), (modes.num_modes,))
    except ValueError:
        raise StructuralError(f"{name} must hold one value per mode")
    if not np.all(np.isfinite(arr)):
        raise InvalidParameterError(f"{name} must be finite")
    return np.array(arr)


def coherent_state(alphas: Sequence[complex], modes: ModeTable) -> GaussianState:
    """Product of coherent states |α_m⟩."""
    alphas = _per_mode(np.asarray(alphas, dtype=complex), modes, 'alphas')
    d = np.sqrt(2.0) * np.stack([alphas.real, alphas.imag], axis=1).reshape(-1)
    return GaussianState(modes, d, np.eye(2 * modes.num_modes))


def _single_mode_covariance(nbar: float, r: float, theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    R = np.array([[c, -s], [s, c]])
    return (2.0 * nbar + 1.0) * R @ np.diag([np.exp(-2.0 * r), np.exp(2.0 * r)]) @ R.T


def squeezed_thermal_state(nbar: float, r: float, theta: float = 0.0,
                           modes: ModeTable = None) -> GaussianState:
    """Single-mode squeezed thermal state."""
    if nbar < 0:
        raise InvalidParameterError(f"occupation must be non-negative, got {nbar}")
    modes = modes or ModeTable.single_frequency(1)
    if modes.num_modes != 1:
        raise StructuralError("squeezed thermal states are single-mode")
    return GaussianState(modes, np.zeros(2), _single_mode_covariance(nbar, r, theta))


def squeezed_vacuum(r: Sequence[float], theta: Sequence[float],
                    modes: ModeTable) -> GaussianState:
    """Product of squeezed vacua with V_m = R(θ/2) diag(e^{−2r}, e^{2r}) R(θ/2)ᵀ."""
    r = _per_mode(r, modes, 'r')
    theta = _per_mode(theta, modes, 'theta')
    V = np.zeros((2 * modes.num_modes,) * 2)
    for m in range(modes.num_modes):
        V[2 * m:2 * m + 2, 2 * m:2 * m + 2] = _single_mode_covariance(0.0, r[m], theta[m])
    return GaussianState(modes, np.zeros(2 * modes.num_modes), V)


def two_mode_squeezed_vacuum(r: float, pair: Tuple[int, int], modes: ModeTable,
                             allow_cross_frequency: bool = False) -> GaussianState:
    """
    Two-mode squeezed vacuum on ``pair``, vacuum elsewhere.

    Blocks are cosh(2r) I₂ on the diagonal and ±sinh(2r) diag(1, −1) off it.

    Raises:
        CrossFrequencyError: If the pair has unequal frequencies and
            ``allow_cross_frequency`` is False.
    """
    m1, m2 = (int(m) for m in pair)
    if m1 == m2:
        raise StructuralError("two-mode squeezing needs two distinct modes")
    if not modes.same_frequency([m1, m2]) and not allow_cross_frequency:
        raise CrossFrequencyError(
            "two-mode squeezing across frequencies requires allow_cross_frequency=True")
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    Z = np.diag([1.0, -1.0])
    block = np.block([[c * np.eye(2), s * Z], [s * Z, c * np.eye(2)]])
    V = np.eye(2 * modes.num_modes)
    idx = quadrature_indices([m1, m2])
    V[np.ix_(idx, idx)] = block
    return GaussianState(modes, np.zeros(2 * modes.num_modes), V)


PURE_STATES: Dict[str, Callable[..., GaussianState]] = {
    'coherent': lambda modes, alphas: coherent_state(alphas, modes),
    'squeezed_vacuum': lambda modes, r, theta=0.0: squeezed_vacuum(r, theta, modes),
    'two_mode_squeezed': lambda modes, r, pair=(0, 1), allow_cross_frequency=False:
        two_mode_squeezed_vacuum(r, pair, modes, allow_cross_frequency),
}


def pure_state_factory(kind: str, modes: ModeTable, **params) -> GaussianState:
    """
    Pure Gaussian state by name: 'coherent', 'squeezed_vacuum' or
    'two_mode_squeezed'.
    """
    try:
        factory = PURE_STATES[kind]
    except KeyError:
        raise StructuralError(
            f"unknown pure state {kind!r}; expected one of {sorted(PURE_STATES)}")
    return factory(modes, **params)
