"""
Gaussian Channel Module

A Gaussian channel acts on the moments as d → T d + v and V → T V Tᵀ + N.
Complete positivity requires the Hermitian matrix N + i(Ω − T Ω Tᵀ) to be
positive semidefinite, which implies N ⪰ 0.

Classes:
    - GaussianChannel: The (T, N, v) triple over a ModeTable.
    - ChannelVerdict: Result of ``validate_channel``.

Functions:
    - validate_channel: Checks N ⪰ 0 and the complete-positivity condition.
    - apply_channel: Applies a valid channel to a state.
    - compose_channels: (T₂T₁, T₂N₁T₂ᵀ + N₂, T₂v₁ + v₂).
    - identity_channel, unitary_channel, displacement_channel, loss_channel.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.symplectic_form import symplectic_form
from ..exceptions import (
    InvalidParameterError, NotCompletelyPositiveError, StructuralError)
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL

__all__ = [
    'GaussianChannel',
    'ChannelVerdict',
    'validate_channel',
    'apply_channel',
    'compose_channels',
    'identity_channel',
    'unitary_channel',
    'displacement_channel',
    'loss_channel',
]

logger = logger_utility.logger


def _frozen(array, dtype=float) -> np.ndarray:
    out = np.array(array, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class GaussianChannel:
    """
    Attributes:
        modes (ModeTable): Table of the system acted on.
        transfer (np.ndarray): T, real 2M×2M.
        noise (np.ndarray): N, real symmetric 2M×2M.
        shift (np.ndarray): v, real vector of length 2M.
    """
    modes: ModeTable
    transfer: np.ndarray
    noise: np.ndarray
    shift: np.ndarray

    def __post_init__(self):
        dim = 2 * self.modes.num_modes
        for name, shape in (('transfer', (dim, dim)), ('noise', (dim, dim)),
                            ('shift', (dim,))):
            value = np.asarray(getattr(self, name))
            if value.shape != shape or np.iscomplexobj(value):
                raise StructuralError(
                    f"channel {name} must be real with shape {shape}, got {value.shape}")
            object.__setattr__(self, name, _frozen(value))

    @property
    def num_modes(self) -> int:
        return self.modes.num_modes

    def cp_matrix(self) -> np.ndarray:
        """The Hermitian matrix N + i(Ω − T Ω Tᵀ)."""
        omega = symplectic_form(self.num_modes)
        T = self.transfer
        return self.noise + 1j * (omega - T @ omega @ T.T)

    def __call__(self, state: GaussianState) -> GaussianState:
        return apply_channel(self, state)


@dataclass(frozen=True)
class ChannelVerdict:
    """
    Attributes:
        status (str): 'ok', 'not_cp' or 'malformed'.
        min_eigenvalue (float): Most negative eigenvalue of the failing test.
        detail (str): Human readable explanation.
    """
    status: str
    min_eigenvalue: float = 0.0
    detail: str = ''

    @property
    def ok(self) -> bool:
        return self.status == 'ok'

    def to_dict(self) -> dict:
        return {'status': self.status, 'min_eigenvalue': self.min_eigenvalue,
                'detail': self.detail}


def validate_channel(ch: GaussianChannel, tol: float = DEFAULT_TOL) -> ChannelVerdict:
    """
    Eigenvalue-based validity check of a Gaussian channel.

    Args:
        ch (GaussianChannel): The channel.
        tol (float): Tolerance on symmetry and on negative eigenvalues,
            scaled by max(1, ‖T‖²_max, ‖N‖_max).

    Returns:
        ChannelVerdict: 'malformed' for non-finite or asymmetric N, 'not_cp'
        when N or N + i(Ω − TΩTᵀ) has an eigenvalue below −tol, else 'ok'.
    """
    T, N, v = ch.transfer, ch.noise, ch.shift
    if not all(np.all(np.isfinite(x)) for x in (T, N, v)):
        return ChannelVerdict('malformed', detail='non-finite entries')
    scale = max(1.0, float(np.max(np.abs(T))) ** 2, float(np.max(np.abs(N))))
    asym = float(np.max(np.abs(N - N.T)))
    if asym > tol * scale:
        return ChannelVerdict('malformed', detail=f'noise matrix not symmetric ({asym:.3e})')

    n_min = float(np.min(np.linalg.eigvalsh(0.5 * (N + N.T))))
    if n_min < -tol * scale:
        return ChannelVerdict('not_cp', n_min, 'noise matrix N is not positive semidefinite')
    cp_min = float(np.min(np.linalg.eigvalsh(ch.cp_matrix())))
    if cp_min < -tol * scale:
        return ChannelVerdict('not_cp', cp_min,
                              'N + i(Ω − TΩTᵀ) is not positive semidefinite')
    return ChannelVerdict('ok', min(n_min, cp_min))


def _require_cp(ch: GaussianChannel, tol: float) -> None:
    verdict = validate_channel(ch, tol)
    if verdict.status == 'malformed':
        raise StructuralError(f"malformed channel: {verdict.detail}")
    if not verdict.ok:
        raise NotCompletelyPositiveError(
            f"channel is not completely positive: {verdict.detail}",
            min_eigenvalue=verdict.min_eigenvalue)


def apply_channel(ch: GaussianChannel, s: GaussianState,
                  tol: float = DEFAULT_TOL) -> GaussianState:
    """
    Applies a channel to a state.

    Args:
        ch (GaussianChannel): A completely positive channel.
        s (GaussianState): Input state on the same mode table.
        tol (float): Tolerance of the complete-positivity check.

    Returns:
        GaussianState: d' = T d + v, V' = T V Tᵀ + N.

    Raises:
        StructuralError: If the mode tables differ.
        NotCompletelyPositiveError: If the channel fails the CP check.
    """
    if ch.modes != s.modes:
        raise StructuralError(
            f"channel acts on {ch.modes} but the state lives on {s.modes}")
    _require_cp(ch, tol)
    T = ch.transfer
    V = T @ s.covariance @ T.T + ch.noise
    return s.with_moments(T @ s.displacement + ch.shift, 0.5 * (V + V.T))


def compose_channels(second: GaussianChannel, first: GaussianChannel) -> GaussianChannel:
    """The channel ``second ∘ first``."""
    if first.modes != second.modes:
        raise StructuralError("cannot compose channels on different mode tables")
    T2 = second.transfer
    return GaussianChannel(
        first.modes,
        T2 @ first.transfer,
        T2 @ first.noise @ T2.T + second.noise,
        T2 @ first.shift + second.shift)


def identity_channel(modes: ModeTable) -> GaussianChannel:
    dim = 2 * modes.num_modes
    return GaussianChannel(modes, np.eye(dim), np.zeros((dim, dim)), np.zeros(dim))


def unitary_channel(S: np.ndarray, modes: ModeTable) -> GaussianChannel:
    """Channel of a Gaussian unitary: T = S, N = 0, v = 0."""
    dim = 2 * modes.num_modes
    return GaussianChannel(modes, np.asarray(S, dtype=float),
                           np.zeros((dim, dim)), np.zeros(dim))


def displacement_channel(v: np.ndarray, modes: ModeTable) -> GaussianChannel:
    dim = 2 * modes.num_modes
    return GaussianChannel(modes, np.eye(dim), np.zeros((dim, dim)),
                           np.asarray(v, dtype=float))


def loss_channel(eta: float, modes: ModeTable,
                 nbar_env: Optional[float] = 0.0) -> GaussianChannel:
    """Thermal loss: T = √η I, N = (1−η)(2n̄_env+1) I."""
    if not 0.0 <= eta <= 1.0:
        raise InvalidParameterError(f"transmissivity must lie in [0, 1], got {eta}")
    dim = 2 * modes.num_modes
    return GaussianChannel(modes, np.sqrt(eta) * np.eye(dim),
                           (1.0 - eta) * (2.0 * nbar_env + 1.0) * np.eye(dim),
                           np.zeros(dim))
