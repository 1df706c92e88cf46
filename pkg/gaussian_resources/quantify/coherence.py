"""
Coherence and Non-Uniformity Module

Relative-entropy quantifiers against thermal references, in nats.

Functions:
    - coherence_rel: C(ρ) = −S(ρ) + Σ_m g(n̄_m), the distance to τ(n̄).
    - coherence_rel_direct: The same quantity through ``relative_entropy``.
    - coherence_max: Largest coherence reachable by passive unitaries,
      −S(ρ) + Σ_ω M_ω g(N_ω/M_ω).
    - sector_coherence_sum: Σ_ω S(ρ_ω‖τ(δ_ω)) over frequency marginals.
    - own_delta: δ_ω = N_ω/M_ω of a state.
    - nonuniformity_rel: S(ρ‖τ_M(δ)) through the general relative entropy.
"""

from typing import Optional, Sequence

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.occupation import mean_occupation
from ..core.operations import reduced_state
from ..exceptions import StructuralError
from ..states.thermal import ThermalSpec, thermal_state, uniform_state_from_delta
from .entropy import occupation_kernel, relative_entropy, von_neumann_entropy

__all__ = [
    'coherence_rel',
    'coherence_rel_direct',
    'coherence_max',
    'sector_coherence_sum',
    'own_delta',
    'nonuniformity_rel',
]


def coherence_rel(s: GaussianState) -> float:
    """
    Relative entropy of Gaussian coherence.

    Zero exactly for thermal states; n̄ = 0 modes contribute nothing.

    Example:
        coherent state with |α|² = 1 → 2 log 2.
    """
    nbar = np.asarray(mean_occupation(s).per_mode)
    value = float(np.sum(occupation_kernel(nbar))) - von_neumann_entropy(s)
    return max(value, 0.0)


def coherence_rel_direct(s: GaussianState) -> float:
    """S(ρ‖τ(n̄)) evaluated without the closed form."""
    nbar = np.maximum(np.asarray(mean_occupation(s).per_mode), 0.0)
    return relative_entropy(s, thermal_state(ThermalSpec(s.modes, tuple(nbar))))


def own_delta(s: GaussianState) -> np.ndarray:
    """δ_ω = N_ω / M_ω from the state's own occupations."""
    N = np.maximum(np.asarray(mean_occupation(s).per_frequency), 0.0)
    return N / np.asarray(s.modes.sector_sizes)


def coherence_max(s: GaussianState) -> float:
    """
    Maximal relative entropy of coherence under passive unitaries.

    Reached when the occupations are equidistributed in every frequency
    sector; sectors with N_ω = 0 contribute 0.

    Example:
        TMSV with sinh² r = 1 → 4 log 2.
    """
    sizes = np.asarray(s.modes.sector_sizes, dtype=float)
    ceiling = float(np.sum(sizes * occupation_kernel(own_delta(s))))
    return max(ceiling - von_neumann_entropy(s), 0.0)


def sector_coherence_sum(s: GaussianState) -> float:
    """
    Σ_ω S(ρ_ω‖τ(δ_ω)) over the single-frequency marginals ρ_ω.

    Equal to ``coherence_max`` when the frequency sectors are uncorrelated.
    """
    total = 0.0
    for k in range(s.modes.num_frequencies):
        marginal = reduced_state(s, s.modes.sector_indices(k))
        total += coherence_max(marginal)
    return total


def nonuniformity_rel(s: GaussianState,
                      reference_delta: Optional[Sequence[float]] = None) -> float:
    """
    Relative entropy of non-uniformity S(ρ‖τ_M(δ)).

    The reference is built from the state's own δ unless ``reference_delta``
    is given; with the own δ the value coincides with ``coherence_max``.

    Args:
        s (GaussianState): The state.
        reference_delta (Sequence[float], optional): δ_ω of the reference.

    Returns:
        float: The relative entropy in nats.
    """
    delta = own_delta(s) if reference_delta is None else np.asarray(reference_delta, dtype=float)
    if delta.shape != (s.modes.num_frequencies,):
        raise StructuralError(f"{delta.size} values of δ for {s.modes.num_frequencies} frequencies")
    return relative_entropy(s, uniform_state_from_delta(s.modes, delta))
