"""
Elementary Gaussian Unitaries Module

Single-mode squeezers and phase shifters, two-mode beam splitters and the
quantum Fourier transform, embedded at target modes of a ModeTable.

Functions:
    - squeezer: Z(r) = diag(e^{−r}, e^{r}) on one mode.
    - phase_shifter: Rotation by θ on one mode.
    - beam_splitter_unitary: 2×2 unitary of transmissivity T and phase φ.
    - beam_splitter: Beam splitter embedded between two modes.
    - elementary_symplectic: Dispatches on the ELEMENTARY registry.
    - qft_unitary: U_jk = e^{2πi jk/n}/√n.
    - qft_passive: QFT embedded on equal-frequency target modes.
"""

from typing import Callable, Dict, Sequence

import numpy as np

from ..core.mode_table import ModeTable, quadrature_indices
from ..exceptions import CrossFrequencyError, InvalidParameterError, StructuralError
from .passive import PassiveUnitary, orthogonal_from_unitary
from .symplectic_matrix import SymplecticMatrix

__all__ = [
    'squeezer',
    'phase_shifter',
    'beam_splitter_unitary',
    'beam_splitter',
    'elementary_symplectic',
    'ELEMENTARY',
    'qft_unitary',
    'qft_passive',
]


def _embed(block: np.ndarray, targets: Sequence[int], modes: ModeTable) -> np.ndarray:
    targets = [int(m) for m in targets]
    for m in targets:
        modes.check_index(m)
    if len(set(targets)) != len(targets):
        raise StructuralError(f"repeated target modes {targets}")
    S = np.eye(2 * modes.num_modes)
    idx = quadrature_indices(targets)
    S[np.ix_(idx, idx)] = block
    return S


def squeezer(r: float, mode: int, modes: ModeTable) -> SymplecticMatrix:
    """Single-mode squeezer; active for r ≠ 0."""
    return SymplecticMatrix(_embed(np.diag([np.exp(-r), np.exp(r)]), [mode], modes), modes)


def phase_shifter(theta: float, mode: int, modes: ModeTable) -> SymplecticMatrix:
    """Phase shift â → e^{iθ} â."""
    block = orthogonal_from_unitary(np.array([[np.exp(1j * theta)]]))
    return SymplecticMatrix(_embed(block, [mode], modes), modes)


def beam_splitter_unitary(phi: float, transmissivity: float = 0.5) -> np.ndarray:
    """
    [[√T, e^{iφ}√(1−T)], [−e^{−iφ}√(1−T), √T]].

    Shifting φ by π yields the adjoint.
    """
    if not 0.0 <= transmissivity <= 1.0:
        raise InvalidParameterError(
            f"transmissivity must lie in [0, 1], got {transmissivity}")
    t, r = np.sqrt(transmissivity), np.sqrt(1.0 - transmissivity)
    return np.array([[t, np.exp(1j * phi) * r],
                     [-np.exp(-1j * phi) * r, t]])


def beam_splitter(phi: float, transmissivity: float, pair: Sequence[int],
                  modes: ModeTable) -> SymplecticMatrix:
    """
    Beam splitter between two modes.

    The matrix is embedded as given; between modes of different frequency it
    is symplectic and orthogonal but classifies as active.
    """
    if len(pair) != 2:
        raise StructuralError(f"a beam splitter acts on two modes, got {list(pair)}")
    block = orthogonal_from_unitary(beam_splitter_unitary(phi, transmissivity))
    return SymplecticMatrix(_embed(block, pair, modes), modes)


ELEMENTARY: Dict[str, Callable[..., SymplecticMatrix]] = {
    'squeezer': lambda modes, targets, r=0.0: squeezer(r, targets[0], modes),
    'phase': lambda modes, targets, theta=0.0: phase_shifter(theta, targets[0], modes),
    'beamsplitter': lambda modes, targets, phi=0.0, transmissivity=0.5:
        beam_splitter(phi, transmissivity, targets, modes),
}


def elementary_symplectic(kind: str, targets: Sequence[int], modes: ModeTable,
                          **params: float) -> SymplecticMatrix:
    """
    Elementary Gaussian unitary by name.

    Args:
        kind (str): 'squeezer' (r), 'phase' (theta) or 'beamsplitter'
            (phi, transmissivity).
        targets (Sequence[int]): Target flat mode indices.
        modes (ModeTable): Table of the full system.
        **params: Parameters of the element.

    Returns:
        SymplecticMatrix: The element, identity on the other modes.

    Raises:
        StructuralError: For an unknown kind or invalid targets.
    """
    try:
        factory = ELEMENTARY[kind]
    except KeyError:
        raise StructuralError(
            f"unknown element {kind!r}; expected one of {sorted(ELEMENTARY)}")
    expected = 2 if kind == 'beamsplitter' else 1
    if len(targets) != expected:
        raise StructuralError(f"{kind} needs {expected} target mode(s), got {list(targets)}")
    return factory(modes, list(targets), **params)


def qft_unitary(n: int) -> np.ndarray:
    """Discrete Fourier unitary of size n."""
    if n < 1:
        raise InvalidParameterError("QFT size must be positive")
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)


def qft_passive(modes: ModeTable, targets: Sequence[int] = None) -> PassiveUnitary:
    """
    Quantum Fourier transform on equal-frequency target modes.

    Args:
        modes (ModeTable): Table of the full system.
        targets (Sequence[int], optional): Modes sharing one frequency;
            defaults to all modes of a single-frequency table.

    Returns:
        PassiveUnitary: QFT on the targets, identity elsewhere.

    Raises:
        CrossFrequencyError: If the targets span several frequencies.
    """
    targets = list(range(modes.num_modes)) if targets is None else [int(m) for m in targets]
    if not modes.same_frequency(targets):
        raise CrossFrequencyError("QFT targets must share one frequency")
    U = np.eye(modes.num_modes, dtype=complex)
    U[np.ix_(targets, targets)] = qft_unitary(len(targets))
    return PassiveUnitary(U, modes)
