"""
Gaussian Noisy Channels Module

A Gaussian noisy (GN) operation couples the system to an environment in the
uniform state τ(δ) with the same δ as the system, applies a passive unitary to
the joint system and traces the environment out:

    Λ[ρ] = Tr_E[U (ρ ⊗ τ_E(δ)) U†].

With the joint orthogonal matrix O partitioned into system and environment
blocks, the effective channel is T = O_SS, N = O_SE V_E O_SEᵀ, v = 0.

Classes:
    - GaussianNoisyChannel: GaussianChannel with its dilation.

Functions:
    - environment_table: Table of the environment modes.
    - make_gn_channel: Builds the effective channel.
    - random_gn_channel: GN channel with a Haar-random joint unitary.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.mode_table import ModeTable, merge_mode_tables, quadrature_indices
from ..exceptions import InvalidParameterError, StructuralError
from ..states.thermal import uniform_state_from_delta
from ..symplectic.passive import PassiveUnitary
from ..symplectic.random_transforms import RngLike, random_passive
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL
from .gaussian_channel import GaussianChannel, _require_cp

__all__ = [
    'GaussianNoisyChannel',
    'environment_table',
    'joint_table',
    'make_gn_channel',
    'random_gn_channel',
]

logger = logger_utility.logger


@dataclass(frozen=True, eq=False)
class GaussianNoisyChannel(GaussianChannel):
    """
    Attributes:
        delta (Tuple[float, ...]): δ_ω of system and environment.
        environment (Optional[ModeTable]): Environment table, None when M_E = 0.
        dilation (Optional[PassiveUnitary]): Joint passive unitary.
    """
    delta: Tuple[float, ...] = ()
    environment: Optional[ModeTable] = None
    dilation: Optional[PassiveUnitary] = None


def environment_table(modes: ModeTable,
                      environment_sizes: Optional[Sequence[int]] = None
                      ) -> Optional[ModeTable]:
    """
    Environment modes per system frequency; one ancilla per system mode by
    default. Frequencies given zero ancillas are dropped; None when M_E = 0.
    """
    sizes = modes.sector_sizes if environment_sizes is None else tuple(
        int(n) for n in environment_sizes)
    if len(sizes) != modes.num_frequencies:
        raise StructuralError(
            f"{len(sizes)} environment sizes for {modes.num_frequencies} frequencies")
    if any(n < 0 for n in sizes):
        raise InvalidParameterError(f"environment sizes must be non-negative: {sizes}")
    kept = [(w, n) for w, n in zip(modes.omegas, sizes) if n > 0]
    if not kept:
        return None
    omegas, counts = zip(*kept)
    return ModeTable(tuple(omegas), tuple(counts))


def joint_table(modes: ModeTable, environment: Optional[ModeTable]):
    """Joint table and the positions of system and environment modes in it."""
    if environment is None:
        return modes, np.arange(modes.num_modes), np.zeros(0, dtype=int)
    return merge_mode_tables(modes, environment)


def _delta_for(table: ModeTable, modes: ModeTable, delta: np.ndarray) -> np.ndarray:
    return np.array([delta[modes.omegas.index(w)] for w in table.omegas])


def make_gn_channel(modes: ModeTable,
                    delta: Sequence[float],
                    unitary: Optional[PassiveUnitary] = None,
                    environment_sizes: Optional[Sequence[int]] = None,
                    environment_delta: Optional[Sequence[float]] = None,
                    rng: RngLike = None,
                    tol: float = DEFAULT_TOL) -> GaussianNoisyChannel:
    """
    Effective channel of a GN dilation.

    Args:
        modes (ModeTable): The system.
        delta (Sequence[float]): δ_ω ≥ 0 of the system uniform state.
        unitary (PassiveUnitary, optional): Passive unitary over the joint
            table returned by ``joint_table``; Haar-random when omitted.
        environment_sizes (Sequence[int], optional): Ancillas per frequency.
        environment_delta (Sequence[float], optional): δ of the environment;
            must equal ``delta`` when given.
        rng: Seed or Generator for the random unitary.
        tol (float): Tolerance of the δ comparison and the CP check.

    Returns:
        GaussianNoisyChannel: T = O_SS, N = O_SE V_E O_SEᵀ, v = 0.

    Raises:
        InvalidParameterError: If δ is negative or the environment δ differs.
        StructuralError: If the unitary is not over the joint table.
    """
    delta = np.asarray(delta, dtype=float)
    if delta.shape != (modes.num_frequencies,):
        raise StructuralError(f"{delta.size} values of δ for {modes.num_frequencies} frequencies")
    if np.any(delta < 0):
        raise InvalidParameterError(f"δ must be non-negative: {delta.tolist()}")
    if environment_delta is not None and not np.allclose(
            environment_delta, delta, rtol=0, atol=tol):
        raise InvalidParameterError(
            "the environment must share the system δ "
            f"({list(environment_delta)} != {delta.tolist()})")

    environment = environment_table(modes, environment_sizes)
    table, idx_s, idx_e = joint_table(modes, environment)
    if unitary is None:
        unitary = random_passive(table, rng)
    if unitary.modes != table:
        raise StructuralError(f"dilation unitary must act on the joint table {table}")

    O = unitary.orthogonal
    qs = quadrature_indices(idx_s)
    T = O[np.ix_(qs, qs)]
    dim = 2 * modes.num_modes
    if environment is None:
        N = np.zeros((dim, dim))
    else:
        qe = quadrature_indices(idx_e)
        V_env = uniform_state_from_delta(
            environment, _delta_for(environment, modes, delta)).covariance
        O_se = O[np.ix_(qs, qe)]
        N = O_se @ V_env @ O_se.T
        N = 0.5 * (N + N.T)

    channel = GaussianNoisyChannel(
        modes=modes, transfer=T, noise=N, shift=np.zeros(dim),
        delta=tuple(float(x) for x in delta),
        environment=environment, dilation=unitary)
    _require_cp(channel, tol)
    logger.debug(f"GN channel: M={modes.num_modes}, "
                 f"M_E={0 if environment is None else environment.num_modes}")
    return channel


def random_gn_channel(modes: ModeTable, delta: Sequence[float], rng: RngLike = None,
                      environment_sizes: Optional[Sequence[int]] = None
                      ) -> GaussianNoisyChannel:
    return make_gn_channel(modes, delta, environment_sizes=environment_sizes, rng=rng)
