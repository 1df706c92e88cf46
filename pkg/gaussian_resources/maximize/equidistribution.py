"""
Equidistribution Module

Exact passive unitaries that equalize the mean occupations inside every
frequency sector, which is where the coherence reaches its ceiling C_max.

Classes:
    - BeamSplitterMaximizer: Phase-tuned 50:50 splitter for two modes.
    - QFTMaximizer: Fourier transform per sector for product, undisplaced states.
    - SpectralMaximizer: Diagonalize the occupation matrix, then Fourier.

Functions:
    - balancing_phase: φ that balances a two-mode state.
    - spectral_unitary: The equidistributing unitary of any state.
    - check_product_precondition: Zero displacement and no cross-mode covariance.
    - balancing_beam_splitter, qft_equidistribute, spectral_equidistribute.
"""

import numpy as np
from scipy.linalg import block_diag, eigh

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.occupation import mean_occupation, mode_pair_correlator, occupation_matrix
from ..exceptions import CrossFrequencyError, PreconditionError, StructuralError
from ..symplectic.elementary import beam_splitter_unitary, qft_unitary
from ..symplectic.passive import PassiveUnitary
from ..utils.settings_utils import DEFAULT_TOL
from .base_maximizer import BaseMaximizer
from .outcome import MaximizerOutcome

__all__ = [
    'ZERO_CORRELATOR',
    'balancing_phase',
    'sector_qft',
    'spectral_unitary',
    'check_product_precondition',
    'BeamSplitterMaximizer',
    'QFTMaximizer',
    'SpectralMaximizer',
    'balancing_beam_splitter',
    'qft_equidistribute',
    'spectral_equidistribute',
]

ZERO_CORRELATOR = 1e-12


def balancing_phase(s: GaussianState) -> float:
    """
    Splitter phase φ = θ − π/2 with c = ⟨â₁â₂†⟩ = |c| e^{iθ}.

    The splitter outputs n̄ = (n̄₁+n̄₂)/2 ± |c| cos(φ − θ), so this phase
    balances them. θ is taken as 0 when |c| < 1e-12.
    """
    c = mode_pair_correlator(s, 0, 1)
    theta = 0.0 if abs(c) < ZERO_CORRELATOR else float(np.angle(c))
    return theta - np.pi / 2


def sector_qft(modes: ModeTable) -> PassiveUnitary:
    """Fourier transform inside every frequency sector."""
    return PassiveUnitary(block_diag(*[qft_unitary(n) for n in modes.sector_sizes]), modes)


def spectral_unitary(s: GaussianState) -> PassiveUnitary:
    """
    Equidistributing passive unitary for an arbitrary state.

    Per sector, A_ω = W Λ W† is rotated to Λ and then spread by the Fourier
    transform F, so that the new occupation matrix F Λ F† has the constant
    diagonal N_ω / M_ω.
    """
    A = occupation_matrix(s)
    blocks = []
    for k in range(s.modes.num_frequencies):
        idx = list(s.modes.sector_indices(k))
        _, W = eigh(A[np.ix_(idx, idx)])
        blocks.append(qft_unitary(len(idx)).conj() @ W.T)
    return PassiveUnitary(block_diag(*blocks), s.modes)


def check_product_precondition(s: GaussianState, tol: float = DEFAULT_TOL) -> None:
    """
    Raises:
        PreconditionError: If the state is displaced or has covariance
            between distinct modes, relative to ``tol·(1 + max|V|)``.
    """
    V = s.covariance
    scale = 1.0 + float(np.max(np.abs(V)))
    local = np.kron(np.eye(s.num_modes), np.ones((2, 2))).astype(bool)
    cross = float(np.max(np.abs(V[~local]))) if s.num_modes > 1 else 0.0
    shift = float(np.max(np.abs(s.displacement)))
    if shift > tol * scale or cross > tol * scale:
        raise PreconditionError(
            "the Fourier maximizer needs an undisplaced product state",
            max_displacement=shift, max_cross_covariance=cross)


class SpectralMaximizer(BaseMaximizer):
    """
    SpectralMaximizer

    Equidistributes any Gaussian state; occupations after a passive map
    depend only on the occupation matrix.
    """
    method = 'spectral'

    def transform(self, state: GaussianState) -> PassiveUnitary:
        return spectral_unitary(state)


class BeamSplitterMaximizer(BaseMaximizer):
    """
    BeamSplitterMaximizer

    Balances two equal-frequency modes with a 50:50 splitter whose phase
    follows the pair correlator. Falls back to the spectral unitary if the
    outputs are not balanced within tolerance.

    Attributes:
        tol (float): Balance tolerance, scaled by 1 + N.
    """
    method = 'beam-splitter'

    def __init__(self, objective='coherence', bipartition=None, logger=None,
                 tol: float = DEFAULT_TOL):
        super().__init__(objective, bipartition, logger)
        self.tol = tol

    def transform(self, state: GaussianState) -> PassiveUnitary:
        if state.num_modes != 2:
            raise StructuralError(
                f"the beam-splitter maximizer needs two modes, got {state.num_modes}")
        if not state.modes.same_frequency([0, 1]):
            raise CrossFrequencyError("a splitter between different frequencies is active")
        phi = balancing_phase(state)
        U = PassiveUnitary(beam_splitter_unitary(phi), state.modes)
        n = np.asarray(mean_occupation(U.apply(state)).per_mode)
        imbalance = abs(n[0] - n[1])
        if imbalance > self.tol * (1.0 + n.sum()):
            self.logger.warning(
                f"splitter left imbalance {imbalance:.3e}; using the spectral unitary")
            return spectral_unitary(state)
        self.logger.debug(f"balancing phase {phi:.12g}, imbalance {imbalance:.3e}")
        return U


class QFTMaximizer(BaseMaximizer):
    """
    QFTMaximizer

    Fourier transform per frequency sector. Exact for undisplaced product
    states, whose occupation matrix is already diagonal.

    Attributes:
        tol (float): Precondition tolerance.
    """
    method = 'qft'

    def __init__(self, objective='coherence', bipartition=None, logger=None,
                 tol: float = DEFAULT_TOL):
        super().__init__(objective, bipartition, logger)
        self.tol = tol

    def transform(self, state: GaussianState) -> PassiveUnitary:
        check_product_precondition(state, self.tol)
        return sector_qft(state.modes)


def balancing_beam_splitter(s: GaussianState, tol: float = DEFAULT_TOL) -> MaximizerOutcome:
    """
    Example:
        coherent |α|² = 2 ⊗ vacuum → occupations (1, 1), C = 4 log 2.
    """
    return BeamSplitterMaximizer(tol=tol).maximize(s)


def qft_equidistribute(s: GaussianState, tol: float = DEFAULT_TOL) -> MaximizerOutcome:
    """
    Example:
        squeezed vacuum (r = 1) ⊗ vacuum ⊗ vacuum → each n̄ = sinh²(1)/3.
    """
    return QFTMaximizer(tol=tol).maximize(s)


def spectral_equidistribute(s: GaussianState) -> MaximizerOutcome:
    return SpectralMaximizer().maximize(s)
