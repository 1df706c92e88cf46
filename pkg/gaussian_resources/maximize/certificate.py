"""
Equidistribution Certificate Module

Functions:
    - equidistribution_certificate: Per-frequency check that the mean
      occupations are equal, with the largest deviation.
    - concentrated_state: Coherent states spreading N quanta over the first
      M̃ modes of one frequency.
    - concentrated_coherence_curve: M̃ g(N/M̃) for M̃ = 1 … M_s.
"""

from dataclasses import dataclass
from typing import List

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.occupation import mean_occupation
from ..exceptions import InvalidParameterError
from ..quantify.entropy import occupation_kernel
from ..states.pure import coherent_state
from ..utils.settings_utils import DEFAULT_TOL

__all__ = [
    'FrequencyCertificate',
    'equidistribution_certificate',
    'concentrated_state',
    'concentrated_coherence_curve',
]


@dataclass(frozen=True)
class FrequencyCertificate:
    omega: float
    certified: bool
    deviation: float

    def to_dict(self) -> dict:
        return {'omega': self.omega, 'certified': self.certified, 'deviation': self.deviation}


def equidistribution_certificate(s: GaussianState,
                                 tol: float = DEFAULT_TOL) -> List[FrequencyCertificate]:
    """
    Certifies max_j |n̄_{ω;j} − N_ω/M_ω| ≤ tol for every frequency.

    A certified state has coherence equal to its maximal coherence.

    Example:
        coherent |α|² = 2 ⊗ vacuum → not certified, deviation 1.
    """
    nbar = np.asarray(mean_occupation(s).per_mode)
    certificates = []
    for k, omega in enumerate(s.modes.omegas):
        sector = nbar[list(s.modes.sector_indices(k))]
        deviation = float(np.max(np.abs(sector - sector.mean())))
        certificates.append(FrequencyCertificate(float(omega), deviation <= tol, deviation))
    return certificates


def concentrated_state(total: float, occupied: int, spatial_modes: int,
                       omega: float = 1.0) -> GaussianState:
    """N quanta in coherent states of equal amplitude on the first M̃ modes."""
    if not 1 <= occupied <= spatial_modes:
        raise InvalidParameterError(
            f"occupied modes must lie in [1, {spatial_modes}], got {occupied}")
    if total < 0:
        raise InvalidParameterError(f"total occupation must be non-negative, got {total}")
    alphas = np.zeros(spatial_modes)
    alphas[:occupied] = np.sqrt(total / occupied)
    return coherent_state(alphas, ModeTable.single_frequency(spatial_modes, omega))


def concentrated_coherence_curve(total: float, spatial_modes: int) -> np.ndarray:
    """
    Coherence of ``concentrated_state`` for M̃ = 1 … M_s.

    Strictly increasing in M̃ whenever N > 0.
    """
    if total < 0:
        raise InvalidParameterError(f"total occupation must be non-negative, got {total}")
    occupied = np.arange(1, spatial_modes + 1)
    return occupied * occupation_kernel(total / occupied)
