"""
Passive Unitaries Module

Energy-preserving Gaussian unitaries: orthogonal-symplectic matrices that only
couple modes of equal frequency. A unitary U acting on the annihilation
operators, â → U â, corresponds to the real matrix with 2×2 blocks
[[Re U_jk, −Im U_jk], [Im U_jk, Re U_jk]].

Classes:
    - PassiveUnitary: A frequency-block-diagonal unitary and its real form.
    - SymplecticClass: Verdict of ``classify_symplectic``.

Functions:
    - orthogonal_from_unitary: U ↦ O.
    - unitary_from_orthogonal: O ↦ U for matrices commuting with Ω.
    - passive_from_unitary: Validated PassiveUnitary from U.
    - is_frequency_block_diagonal: Checks that a matrix never mixes frequencies.
    - classify_symplectic: not_symplectic, active or passive.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.operations import apply_symplectic
from ..exceptions import CrossFrequencyError, NotUnitaryError, StructuralError
from ..utils.settings_utils import DEFAULT_TOL
from .symplectic_matrix import SymplecticMatrix, symplectic_residual

__all__ = [
    'PassiveUnitary',
    'SymplecticClass',
    'orthogonal_from_unitary',
    'unitary_from_orthogonal',
    'passive_from_unitary',
    'is_frequency_block_diagonal',
    'classify_symplectic',
]


def orthogonal_from_unitary(U: np.ndarray) -> np.ndarray:
    """Real 2M×2M orthogonal-symplectic matrix of an M×M unitary."""
    U = np.asarray(U, dtype=complex)
    M = U.shape[0]
    O = np.empty((2 * M, 2 * M))
    O[0::2, 0::2] = U.real
    O[0::2, 1::2] = -U.imag
    O[1::2, 0::2] = U.imag
    O[1::2, 1::2] = U.real
    return O


def unitary_from_orthogonal(O: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Recovers U from its real form.

    Raises:
        StructuralError: If O does not have the [[Re, −Im], [Im, Re]] block shape.
    """
    O = np.asarray(O, dtype=float)
    re, im = O[0::2, 0::2], O[1::2, 0::2]
    mismatch = max(float(np.max(np.abs(O[1::2, 1::2] - re))),
                   float(np.max(np.abs(O[0::2, 1::2] + im))))
    if mismatch > tol:
        raise StructuralError(
            f"matrix does not commute with Ω (residual {mismatch:.3e})",
            residual=mismatch)
    return re + 1j * im


def is_frequency_block_diagonal(S: np.ndarray, modes: ModeTable,
                                tol: float = DEFAULT_TOL) -> bool:
    """True iff every 2×2 block coupling two different frequencies vanishes."""
    sectors = modes.mode_sectors
    mask = np.kron(sectors[:, None] != sectors[None, :], np.ones((2, 2), dtype=bool))
    if not mask.any():
        return True
    return float(np.max(np.abs(np.asarray(S)[mask]))) <= tol


class SymplecticClass(str, Enum):
    NOT_SYMPLECTIC = 'not_symplectic'
    ACTIVE = 'active'
    PASSIVE = 'passive'


def classify_symplectic(S: np.ndarray, modes: ModeTable,
                        tol: float = DEFAULT_TOL) -> SymplecticClass:
    """
    Classifies a real matrix as not symplectic, active or passive.

    Passive means symplectic, orthogonal and frequency-block-diagonal; any
    other symplectic matrix is active.

    Args:
        S (np.ndarray): Real 2M×2M matrix.
        modes (ModeTable): Table fixing the frequency blocks.
        tol (float): Tolerance, scaled by max(1, ‖S‖²_max) for the symplectic test.

    Returns:
        SymplecticClass: The verdict.
    """
    S = np.asarray(S, dtype=float)
    dim = 2 * modes.num_modes
    if S.shape != (dim, dim):
        return SymplecticClass.NOT_SYMPLECTIC
    scale = max(1.0, float(np.max(np.abs(S))) ** 2)
    if symplectic_residual(S) > tol * scale:
        return SymplecticClass.NOT_SYMPLECTIC
    orthogonal = float(np.max(np.abs(S @ S.T - np.eye(dim)))) <= tol
    if orthogonal and is_frequency_block_diagonal(S, modes, tol):
        return SymplecticClass.PASSIVE
    return SymplecticClass.ACTIVE


@dataclass(frozen=True, eq=False)
class PassiveUnitary:
    """
    A passive Gaussian unitary.

    Attributes:
        unitary (np.ndarray): Complex M×M unitary on the annihilation operators.
        modes (ModeTable): Table it acts on.
    """
    unitary: np.ndarray
    modes: ModeTable

    def __post_init__(self):
        U = np.array(self.unitary, dtype=complex, copy=True)
        M = self.modes.num_modes
        if U.shape != (M, M):
            raise StructuralError(f"unitary has shape {U.shape}, expected ({M}, {M})")
        U.setflags(write=False)
        object.__setattr__(self, 'unitary', U)

    @classmethod
    def identity(cls, modes: ModeTable) -> 'PassiveUnitary':
        return cls(np.eye(modes.num_modes), modes)

    @property
    def orthogonal(self) -> np.ndarray:
        """The real orthogonal-symplectic matrix O."""
        return orthogonal_from_unitary(self.unitary)

    @property
    def symplectic(self) -> SymplecticMatrix:
        return SymplecticMatrix(self.orthogonal, self.modes)

    def __matmul__(self, other: 'PassiveUnitary') -> 'PassiveUnitary':
        if other.modes != self.modes:
            raise StructuralError("cannot compose unitaries on different mode tables")
        return PassiveUnitary(self.unitary @ other.unitary, self.modes)

    def adjoint(self) -> 'PassiveUnitary':
        return PassiveUnitary(self.unitary.conj().T, self.modes)

    def apply(self, state: GaussianState) -> GaussianState:
        if state.modes != self.modes:
            raise StructuralError("state and unitary have different mode tables")
        return apply_symplectic(state, self.orthogonal)

    def to_dict(self) -> dict:
        return {
            'unitary': {'real': self.unitary.real.tolist(),
                        'imag': self.unitary.imag.tolist()},
            'orthogonal': self.orthogonal.tolist(),
        }


def passive_from_unitary(U: np.ndarray, modes: ModeTable,
                         tol: float = DEFAULT_TOL) -> PassiveUnitary:
    """
    Validated passive unitary.

    Args:
        U (np.ndarray): Complex M×M matrix.
        modes (ModeTable): Table fixing the frequency sectors.
        tol (float): Tolerance on U†U = I and on cross-frequency entries.

    Returns:
        PassiveUnitary: The transformation, whose real form classifies as passive.

    Raises:
        StructuralError: On a shape mismatch.
        NotUnitaryError: If U†U deviates from I by more than tol.
        CrossFrequencyError: If U couples modes of different frequencies.
    """
    U = np.asarray(U, dtype=complex)
    M = modes.num_modes
    if U.shape != (M, M):
        raise StructuralError(f"unitary has shape {U.shape}, expected ({M}, {M})")
    residual = float(np.max(np.abs(U.conj().T @ U - np.eye(M))))
    if residual > tol:
        raise NotUnitaryError(f"matrix is not unitary (residual {residual:.3e})",
                              residual=residual)
    sectors = modes.mode_sectors
    cross = sectors[:, None] != sectors[None, :]
    if cross.any() and float(np.max(np.abs(U[cross]))) > tol:
        raise CrossFrequencyError(
            "unitary mixes modes of different frequency; such a map is active",
            residual=float(np.max(np.abs(U[cross]))))
    return PassiveUnitary(U, modes)
