"""
Occupation Module

Mean occupation numbers and second-order mode correlators of Gaussian states.

Classes:
    - OccupationProfile: n̄ per mode, N_ω per frequency, total and energy.

Functions:
    - occupation_matrix: The Hermitian matrix A_kl = ⟨â_k† â_l⟩.
    - mean_occupation: Occupation profile of a state.
    - mode_pair_correlator: ⟨â_{m1} â_{m2}†⟩ for distinct modes.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import StructuralError
from .gaussian_state import GaussianState
from .mode_table import ModeTable

__all__ = [
    'OccupationProfile',
    'occupation_matrix',
    'mean_occupation',
    'sector_occupations',
    'mode_pair_correlator',
]


@dataclass(frozen=True)
class OccupationProfile:
    """
    Attributes:
        modes (ModeTable): Table the profile refers to.
        per_mode (Tuple[float, ...]): n̄_m for each flat mode.
        per_frequency (Tuple[float, ...]): N_ω = Σ_j n̄_{ω;j}.
        total (float): N = Σ_ω N_ω.
        energy (float): E = Σ_ω ω N_ω with ħ = 1.
    """
    modes: ModeTable
    per_mode: Tuple[float, ...]
    per_frequency: Tuple[float, ...]
    total: float
    energy: float

    def scaled_energy(self, scale: float) -> float:
        return self.energy * scale

    def to_dict(self, energy_scale: float = 1.0) -> dict:
        return {
            'per_mode': list(self.per_mode),
            'per_frequency': list(self.per_frequency),
            'total': self.total,
            'energy': self.scaled_energy(energy_scale),
        }


def occupation_matrix(s: GaussianState) -> np.ndarray:
    """
    The Hermitian M×M matrix A_kl = ⟨â_k† â_l⟩.

    Its diagonal holds the occupations n̄_m; a passive map with unitary U
    sends A to conj(U)·A·Uᵀ.

    Args:
        s (GaussianState): The state.

    Returns:
        np.ndarray: Complex Hermitian matrix.
    """
    V, d = s.covariance, s.displacement
    Vqq, Vpp = V[0::2, 0::2], V[1::2, 1::2]
    Vqp = V[0::2, 1::2]
    dq, dp = d[0::2], d[1::2]
    A = 0.25 * ((Vqq + Vpp) + 1j * (Vqp - Vqp.T))
    A = A + 0.5 * ((np.outer(dq, dq) + np.outer(dp, dp))
                   + 1j * (np.outer(dq, dp) - np.outer(dp, dq)))
    return A - 0.5 * np.eye(s.num_modes)


def sector_occupations(modes: ModeTable, per_mode: np.ndarray) -> np.ndarray:
    """Sums per-mode occupations into N_ω."""
    return np.bincount(modes.mode_sectors, weights=per_mode,
                       minlength=modes.num_frequencies)


def mean_occupation(s: GaussianState) -> OccupationProfile:
    """
    Mean occupation numbers n̄_m = ¼(Tr V_m + 2|d_m|² − 2).

    Args:
        s (GaussianState): The state.

    Returns:
        OccupationProfile: Per-mode, per-frequency and total occupations, and
        the free energy Σ_ω ω N_ω.
    """
    V, d = s.covariance, s.displacement
    diag = np.diag(V)
    per_mode = 0.25 * (diag[0::2] + diag[1::2]
                       + 2.0 * (d[0::2] ** 2 + d[1::2] ** 2) - 2.0)
    per_frequency = sector_occupations(s.modes, per_mode)
    return OccupationProfile(
        modes=s.modes,
        per_mode=tuple(float(x) for x in per_mode),
        per_frequency=tuple(float(x) for x in per_frequency),
        total=float(np.sum(per_mode)),
        energy=float(np.dot(s.modes.omegas, per_frequency)),
    )


def mode_pair_correlator(s: GaussianState, m1: int, m2: int) -> complex:
    """
    ⟨â_{m1} â_{m2}†⟩ for two distinct modes.

    Args:
        s (GaussianState): The state.
        m1 (int): Flat index of the annihilated mode.
        m2 (int): Flat index of the created mode.

    Returns:
        complex: The correlator.

    Raises:
        StructuralError: If m1 == m2 or an index is out of range.
    """
    s.modes.check_index(m1)
    s.modes.check_index(m2)
    if m1 == m2:
        raise StructuralError(
            "the pair correlator needs two distinct modes; use mean_occupation")
    V, d = s.covariance, s.displacement
    q1, p1, q2, p2 = 2 * m1, 2 * m1 + 1, 2 * m2, 2 * m2 + 1
    value = 0.25 * complex(V[q1, q2] + V[p1, p2], V[p1, q2] - V[q1, p2])
    value += 0.5 * complex(d[q1] * d[q2] + d[p1] * d[p2],
                           d[p1] * d[q2] - d[q1] * d[p2])
    return value
