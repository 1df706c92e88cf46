"""
Maximizer Outcome Module

Classes:
    - MaximizerOutcome: A passive transform with the value it reaches.

Functions:
    - check_energy_preserved: Verifies N_ω before and after a transform.
"""

from dataclasses import dataclass

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.occupation import mean_occupation
from ..exceptions import ToleranceError
from ..symplectic.passive import PassiveUnitary

__all__ = ['ENERGY_RTOL', 'MaximizerOutcome', 'check_energy_preserved']

ENERGY_RTOL = 1e-10


def check_energy_preserved(before: GaussianState, after: GaussianState,
                           rtol: float = ENERGY_RTOL) -> float:
    """
    Per-frequency occupations must agree within ``rtol·(1 + N_ω)``.

    Returns:
        float: The largest scaled deviation.

    Raises:
        ToleranceError: If any sector drifted.
    """
    N0 = np.asarray(mean_occupation(before).per_frequency)
    N1 = np.asarray(mean_occupation(after).per_frequency)
    deviation = float(np.max(np.abs(N1 - N0) / (1.0 + np.abs(N0))))
    if deviation > rtol:
        raise ToleranceError("transform does not preserve the energy per frequency",
                             residual=deviation, tol=rtol)
    return deviation


@dataclass(frozen=True)
class MaximizerOutcome:
    """
    Attributes:
        objective (str): Objective tag the value refers to.
        method (str): Maximizer that produced the transform.
        transform (PassiveUnitary): The passive unitary.
        initial (float): Objective on the input state.
        achieved (float): Objective on the transformed state.
        target (float): Closed-form ceiling C_max of the input.
        gap (float): target − achieved.
        state (GaussianState): The transformed state.
    """
    objective: str
    method: str
    transform: PassiveUnitary
    initial: float
    achieved: float
    target: float
    gap: float
    state: GaussianState

    def to_dict(self) -> dict:
        return {
            'objective': self.objective,
            'method': self.method,
            'initial': self.initial,
            'achieved': self.achieved,
            'target': self.target,
            'gap': self.gap,
            'transform': self.transform.to_dict(),
        }
