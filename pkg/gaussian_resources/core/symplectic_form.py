"""
Symplectic Form Module

Classes:
    - SymplecticForm: The matrix Ω = ⊕ [[0, 1], [−1, 0]] for M modes.

Functions:
    - symplectic_form: Returns Ω as an array.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ['SymplecticForm', 'symplectic_form']

_OMEGA_1 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def symplectic_form(num_modes: int) -> np.ndarray:
    """Ω for ``num_modes`` modes in qpqp ordering."""
    return np.kron(np.eye(num_modes), _OMEGA_1)


@dataclass(frozen=True)
class SymplecticForm:
    num_modes: int

    @property
    def matrix(self) -> np.ndarray:
        return symplectic_form(self.num_modes)

    def residual(self, S: np.ndarray) -> float:
        """‖S Ω Sᵀ − Ω‖_max."""
        omega = self.matrix
        return float(np.max(np.abs(S @ omega @ S.T - omega)))
