"""
Temperature Module

Bose-Einstein statistics of a mode of frequency ω at temperature T, with
ħ = κ = 1: n̄ = 1/(e^{ω/T} − 1) and ν = 2n̄ + 1 = coth(ω/2T).

Functions:
    - nu_from_temperature: Symplectic eigenvalue of the Gibbs state.
    - occupation_from_temperature: Mean occupation of the Gibbs state.
    - temperature_from_occupation: Inverse of occupation_from_temperature.
"""

import numpy as np

from ..exceptions import InvalidParameterError

__all__ = [
    'nu_from_temperature',
    'occupation_from_temperature',
    'temperature_from_occupation',
]


def _check(omega: float, T: float) -> None:
    if not omega > 0:
        raise InvalidParameterError(f"frequency must be positive, got {omega}")
    if T < 0:
        raise InvalidParameterError(f"temperature must be non-negative, got {T}")


def occupation_from_temperature(omega: float, T: float) -> float:
    """n̄ = 1/expm1(ω/T); zero at T = 0."""
    _check(omega, T)
    if T == 0:
        return 0.0
    with np.errstate(over='ignore'):
        return float(1.0 / np.expm1(omega / T))


def nu_from_temperature(omega: float, T: float) -> float:
    """
    ν = 2n̄ + 1 of a thermal mode.

    Monotone increasing in T, with ν → 1 as T → 0⁺.

    Raises:
        InvalidParameterError: If ω ≤ 0 or T < 0.
    """
    return 2.0 * occupation_from_temperature(omega, T) + 1.0


def temperature_from_occupation(omega: float, nbar: float) -> float:
    """T = ω / log(1 + 1/n̄); zero for n̄ = 0."""
    if not omega > 0:
        raise InvalidParameterError(f"frequency must be positive, got {omega}")
    if nbar < 0:
        raise InvalidParameterError(f"occupation must be non-negative, got {nbar}")
    if nbar == 0:
        return 0.0
    return float(omega / np.log1p(1.0 / nbar))
