"""
Thermal and Uniform States Module

Thermal states τ(n̄) = ⊗_m τ(n̄_m) have zero displacement and covariance
⊕_m (2n̄_m+1) I₂. The uniform state τ_M(δ) is the thermal state that spreads
each frequency budget N_ω equally over its spatial modes, δ_ω = N_ω/M_ω.

Classes:
    - ThermalSpec: Mode table and per-mode occupations.
    - UniformSpec: Mode table and per-frequency budgets.

Functions:
    - thermal_state: τ(n̄).
    - uniform_state: τ_M(δ).
    - uniform_state_from_delta: τ_M(δ) from per-frequency δ_ω.
    - thermal_state_from_temperature: Gibbs state of the free Hamiltonian.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, StructuralError
from .temperature import occupation_from_temperature

__all__ = [
    'ThermalSpec',
    'UniformSpec',
    'thermal_state',
    'uniform_state',
    'uniform_state_from_delta',
    'thermal_state_from_temperature',
]


@dataclass(frozen=True)
class ThermalSpec:
    modes: ModeTable
    nbar: Tuple[float, ...]

    def __post_init__(self):
        nbar = tuple(float(x) for x in np.atleast_1d(self.nbar))
        object.__setattr__(self, 'nbar', nbar)
        if len(nbar) != self.modes.num_modes:
            raise StructuralError(
                f"{len(nbar)} occupations for {self.modes.num_modes} modes")
        if any(not np.isfinite(x) or x < 0 for x in nbar):
            raise InvalidParameterError(f"occupations must be non-negative: {nbar}")


@dataclass(frozen=True)
class UniformSpec:
    """
    Attributes:
        modes (ModeTable): The system.
        budget (Tuple[float, ...]): N_ω ≥ 0 for each frequency.
    """
    modes: ModeTable
    budget: Tuple[float, ...]

    def __post_init__(self):
        budget = tuple(float(x) for x in np.atleast_1d(self.budget))
        object.__setattr__(self, 'budget', budget)
        if len(budget) != self.modes.num_frequencies:
            raise StructuralError(
                f"{len(budget)} budgets for {self.modes.num_frequencies} frequencies")
        if any(not np.isfinite(x) or x < 0 for x in budget):
            raise InvalidParameterError(f"energy budgets must be non-negative: {budget}")

    @property
    def delta(self) -> np.ndarray:
        """δ_ω = N_ω / M_ω."""
        return np.asarray(self.budget) / np.asarray(self.modes.sector_sizes)


def thermal_state(spec: ThermalSpec) -> GaussianState:
    """Thermal state with d = 0 and V = ⊕ (2n̄_m+1) I₂."""
    nu = 2.0 * np.asarray(spec.nbar) + 1.0
    dim = 2 * spec.modes.num_modes
    return GaussianState(spec.modes, np.zeros(dim), np.diag(np.repeat(nu, 2)))


def uniform_state_from_delta(modes: ModeTable, delta: Sequence[float]) -> GaussianState:
    """τ_M(δ) with covariance ⊕_ω (2δ_ω+1) I."""
    delta = np.asarray(delta, dtype=float)
    if delta.shape != (modes.num_frequencies,):
        raise StructuralError(
            f"{delta.size} values of δ for {modes.num_frequencies} frequencies")
    return thermal_state(ThermalSpec(modes, tuple(delta[modes.mode_sectors])))


def uniform_state(spec: UniformSpec) -> GaussianState:
    """
    Maximum-entropy state at fixed per-frequency energy.

    Example:
        M_s = 2, one frequency, N = 2 → V = diag(3, 3, 3, 3).
    """
    return uniform_state_from_delta(spec.modes, spec.delta)


def thermal_state_from_temperature(modes: ModeTable, T: float) -> GaussianState:
    """Gibbs state at temperature T; each mode follows Bose-Einstein statistics."""
    nbar = [occupation_from_temperature(w, T) for w in modes.mode_frequencies]
    return thermal_state(ThermalSpec(modes, tuple(nbar)))
