"""
Random States Module

Seeded samplers of valid Gaussian states for property tests and sweeps.

Functions:
    - random_state: V = S D Sᵀ with random symplectic S and thermal D.
    - random_pure_state: Random symplectic acting on the vacuum.
    - random_product_state: Product of squeezed thermal modes with d = 0.
"""

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError
from ..symplectic.random_transforms import (
    DEFAULT_R_MAX, RngLike, as_generator, random_symplectic)
from .pure import _single_mode_covariance

__all__ = ['random_state', 'random_pure_state', 'random_product_state',
           'DEFAULT_NBAR_MAX']

DEFAULT_NBAR_MAX = 3.0


def random_state(modes: ModeTable, rng: RngLike = None,
                 r_max: float = DEFAULT_R_MAX,
                 displacement_scale: float = 1.0,
                 nbar_max: float = DEFAULT_NBAR_MAX) -> GaussianState:
    """
    Random mixed Gaussian state.

    ν_m = 2u_m + 1 with u_m uniform on [0, nbar_max], S a random symplectic
    with squeezing up to r_max, and d normal with standard deviation
    ``displacement_scale``.

    Args:
        modes (ModeTable): The system.
        rng: Seed or Generator; a fixed seed reproduces the state bit for bit.
        r_max (float): Largest squeezing parameter.
        displacement_scale (float): Standard deviation of d.
        nbar_max (float): Largest thermal occupation of the Williamson modes.

    Returns:
        GaussianState: A state that passes ``validate_state``.
    """
    if nbar_max < 0 or displacement_scale < 0:
        raise InvalidParameterError("nbar_max and displacement_scale must be non-negative")
    rng = as_generator(rng)
    nu = 2.0 * rng.uniform(0.0, nbar_max, size=modes.num_modes) + 1.0
    S = random_symplectic(modes, rng, r_max).matrix
    V = S @ np.diag(np.repeat(nu, 2)) @ S.T
    V = 0.5 * (V + V.T)
    d = displacement_scale * rng.standard_normal(2 * modes.num_modes)
    return GaussianState(modes, d, V)


def random_pure_state(modes: ModeTable, rng: RngLike = None,
                      r_max: float = DEFAULT_R_MAX,
                      displacement_scale: float = 0.0) -> GaussianState:
    return random_state(modes, rng, r_max, displacement_scale, nbar_max=0.0)


def random_product_state(modes: ModeTable, rng: RngLike = None,
                         r_max: float = DEFAULT_R_MAX,
                         nbar_max: float = DEFAULT_NBAR_MAX) -> GaussianState:
    """Product of single-mode squeezed thermal states with zero displacement."""
    rng = as_generator(rng)
    M = modes.num_modes
    V = np.zeros((2 * M, 2 * M))
    for m in range(M):
        nbar = rng.uniform(0.0, nbar_max)
        r = rng.uniform(0.0, r_max)
        theta = rng.uniform(0.0, 2.0 * np.pi)
        V[2 * m:2 * m + 2, 2 * m:2 * m + 2] = _single_mode_covariance(nbar, r, theta)
    return GaussianState(modes, np.zeros(2 * M), V)
