"""
Incoherent Gaussian Channels Module

Channels mapping thermal states to thermal states: v = 0, N = ⊕_m w_m I₂ and,
in each frequency sector, T_ω is a permutation of the 2×2 block columns of
⊕_j t_{ω;j} 𝒪_{ω;j} with 𝒪 orthogonal (det ±1).

Output mode π(j) receives input mode j. Complete positivity holds iff
w_m ≥ |1 − t_m² det 𝒪_m| for every mode.

Classes:
    - IncoherentGaussianChannel: GaussianChannel with its defining data.

Functions:
    - minimal_ig_noise: Smallest admissible noise weights.
    - make_ig_channel: Builds and validates a channel.
    - random_ig_channel: Seeded random channel of the class.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import block_diag

from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, NotCompletelyPositiveError, StructuralError
from ..symplectic.random_transforms import RngLike, as_generator
from ..utils.settings_utils import DEFAULT_TOL
from .gaussian_channel import GaussianChannel, validate_channel

__all__ = [
    'IncoherentGaussianChannel',
    'minimal_ig_noise',
    'make_ig_channel',
    'random_ig_channel',
]


@dataclass(frozen=True, eq=False)
class IncoherentGaussianChannel(GaussianChannel):
    """
    Attributes:
        t (Tuple[float, ...]): Attenuation/amplification per mode.
        orthogonals (Tuple[np.ndarray, ...]): 2×2 orthogonal matrices per mode.
        permutations (Tuple[Tuple[int, ...], ...]): Local block-column
            permutation of each frequency sector.
        weights (Tuple[float, ...]): Noise weights w_m ≥ 0.
    """
    t: Tuple[float, ...] = ()
    orthogonals: Tuple[np.ndarray, ...] = ()
    permutations: Tuple[Tuple[int, ...], ...] = ()
    weights: Tuple[float, ...] = ()


def _orthogonals(orthogonals, num_modes: int) -> Tuple[np.ndarray, ...]:
    if orthogonals is None:
        return tuple(np.eye(2) for _ in range(num_modes))
    out = tuple(np.asarray(o, dtype=float) for o in orthogonals)
    if len(out) != num_modes:
        raise StructuralError(f"{len(out)} orthogonal blocks for {num_modes} modes")
    for o in out:
        if o.shape != (2, 2) or not np.allclose(o @ o.T, np.eye(2), atol=1e-10):
            raise StructuralError(f"block {o.tolist()} is not a 2×2 orthogonal matrix")
    return out


def minimal_ig_noise(t: Sequence[float], orthogonals=None) -> np.ndarray:
    """w_m = |1 − t_m² det 𝒪_m|, the least noise keeping the channel CP."""
    t = np.asarray(t, dtype=float)
    dets = np.array([np.linalg.det(o) for o in _orthogonals(orthogonals, t.size)])
    return np.abs(1.0 - t ** 2 * dets)


def _permutations(permutations, modes: ModeTable) -> Tuple[Tuple[int, ...], ...]:
    if permutations is None:
        return tuple(tuple(range(n)) for n in modes.sector_sizes)
    out = tuple(tuple(int(i) for i in p) for p in permutations)
    if len(out) != modes.num_frequencies:
        raise StructuralError(
            f"{len(out)} permutations for {modes.num_frequencies} frequencies")
    for p, n in zip(out, modes.sector_sizes):
        if sorted(p) != list(range(n)):
            raise StructuralError(f"{list(p)} is not a permutation of {n} modes")
    return out


def make_ig_channel(modes: ModeTable,
                    t: Sequence[float],
                    orthogonals: Optional[Sequence[np.ndarray]] = None,
                    permutations: Optional[Sequence[Sequence[int]]] = None,
                    weights: Optional[Sequence[float]] = None,
                    tol: float = DEFAULT_TOL) -> IncoherentGaussianChannel:
    """
    Incoherent Gaussian channel from its defining data.

    Args:
        modes (ModeTable): The system.
        t (Sequence[float]): Coefficients t_m, one per flat mode.
        orthogonals (Sequence[np.ndarray], optional): 𝒪_m; identity by default.
        permutations (Sequence[Sequence[int]], optional): For each frequency,
            π_ω as a list where entry j is the output slot of input mode j.
        weights (Sequence[float], optional): w_m ≥ 0; zero by default.
        tol (float): Tolerance of the complete-positivity check.

    Returns:
        IncoherentGaussianChannel: The validated channel.

    Raises:
        StructuralError: If the data are malformed.
        InvalidParameterError: If a weight is negative.
        NotCompletelyPositiveError: With the minimal admissible weights.
    """
    M = modes.num_modes
    t = np.asarray(t, dtype=float)
    if t.shape != (M,):
        raise StructuralError(f"{t.size} coefficients for {M} modes")
    blocks = _orthogonals(orthogonals, M)
    perms = _permutations(permutations, modes)
    w = np.zeros(M) if weights is None else np.asarray(weights, dtype=float)
    if w.shape != (M,):
        raise StructuralError(f"{w.size} noise weights for {M} modes")
    if np.any(w < 0):
        raise InvalidParameterError(f"noise weights must be non-negative: {w.tolist()}")

    B = block_diag(*[tm * o for tm, o in zip(t, blocks)])
    P = np.zeros((2 * M, 2 * M))
    for k, perm in enumerate(perms):
        offset = modes.sector_offsets[k]
        for j, target in enumerate(perm):
            src, dst = offset + j, offset + target
            P[2 * dst:2 * dst + 2, 2 * src:2 * src + 2] = np.eye(2)

    channel = IncoherentGaussianChannel(
        modes=modes,
        transfer=B @ P,
        noise=np.diag(np.repeat(w, 2)),
        shift=np.zeros(2 * M),
        t=tuple(float(x) for x in t),
        orthogonals=blocks,
        permutations=perms,
        weights=tuple(float(x) for x in w),
    )
    verdict = validate_channel(channel, tol)
    if not verdict.ok:
        suggested = np.maximum(w, minimal_ig_noise(t, blocks))
        raise NotCompletelyPositiveError(
            "incoherent channel data violate complete positivity; "
            f"smallest admissible weights are {suggested.tolist()}",
            min_eigenvalue=verdict.min_eigenvalue,
            suggested_weights=suggested.tolist())
    return channel


def random_ig_channel(modes: ModeTable, rng: RngLike = None,
                      t_max: float = 1.5, extra_noise: float = 1.0
                      ) -> IncoherentGaussianChannel:
    """Random CP incoherent channel: t uniform on [0, t_max], random 𝒪 and π."""
    rng = as_generator(rng)
    M = modes.num_modes
    t = rng.uniform(0.0, t_max, size=M)
    blocks = []
    for _ in range(M):
        theta = rng.uniform(0.0, 2.0 * np.pi)
        c, s = np.cos(theta), np.sin(theta)
        rotation = np.array([[c, -s], [s, c]])
        blocks.append(rotation @ np.diag([1.0, -1.0]) if rng.random() < 0.5 else rotation)
    perms = [tuple(int(i) for i in rng.permutation(n)) for n in modes.sector_sizes]
    w = minimal_ig_noise(t, blocks) + rng.uniform(0.0, extra_noise, size=M)
    return make_ig_channel(modes, t, blocks, perms, w)
