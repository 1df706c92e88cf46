"""
Uniformity Preservation Module

Functions:
    - is_uniformity_preserving: Tests Λ(τ_M(δ)) = τ_M(δ).
"""

import numpy as np

from ..states.thermal import UniformSpec, uniform_state
from ..utils.settings_utils import DEFAULT_TOL
from .gaussian_channel import GaussianChannel, apply_channel

__all__ = ['is_uniformity_preserving']


def is_uniformity_preserving(ch: GaussianChannel, spec: UniformSpec,
                             tol: float = DEFAULT_TOL) -> bool:
    """
    True iff the channel maps the uniform state of ``spec`` to itself.

    Both moments are compared in max-norm with tolerance
    tol·max(1, ‖V‖_max).
    """
    tau = uniform_state(spec)
    out = apply_channel(ch, tau, tol)
    scale = max(1.0, float(np.max(np.abs(tau.covariance))))
    return bool(np.max(np.abs(out.displacement - tau.displacement)) <= tol * scale
                and np.max(np.abs(out.covariance - tau.covariance)) <= tol * scale)
