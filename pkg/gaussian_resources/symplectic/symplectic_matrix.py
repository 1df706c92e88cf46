"""
Symplectic Matrix Module

Classes:
    - SymplecticMatrix: A real 2M×2M matrix S with S Ω Sᵀ = Ω over a ModeTable.

Functions:
    - symplectic_residual: ‖S Ω Sᵀ − Ω‖_max.
    - symplectic_inverse: S⁻¹ = −Ω Sᵀ Ω.
"""

from dataclasses import dataclass

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.operations import apply_symplectic
from ..core.symplectic_form import symplectic_form
from ..exceptions import NotSymplecticError, StructuralError
from ..utils.settings_utils import DEFAULT_TOL

__all__ = ['SymplecticMatrix', 'symplectic_residual', 'symplectic_inverse']


def symplectic_residual(S: np.ndarray) -> float:
    S = np.asarray(S, dtype=float)
    omega = symplectic_form(S.shape[0] // 2)
    return float(np.max(np.abs(S @ omega @ S.T - omega)))


def symplectic_inverse(S: np.ndarray) -> np.ndarray:
    omega = symplectic_form(S.shape[0] // 2)
    return -omega @ S.T @ omega


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """
    A Gaussian unitary in phase space.

    Attributes:
        matrix (np.ndarray): Real 2M×2M matrix.
        modes (ModeTable): Mode table the matrix acts on.
    """
    matrix: np.ndarray
    modes: ModeTable

    def __post_init__(self):
        S = np.array(self.matrix, dtype=float, copy=True)
        dim = 2 * self.modes.num_modes
        if S.shape != (dim, dim):
            raise StructuralError(
                f"symplectic matrix has shape {S.shape}, expected ({dim}, {dim})")
        S.setflags(write=False)
        object.__setattr__(self, 'matrix', S)

    @classmethod
    def checked(cls, matrix: np.ndarray, modes: ModeTable,
                tol: float = DEFAULT_TOL) -> 'SymplecticMatrix':
        """Constructs the matrix after verifying S Ω Sᵀ = Ω within tol.

        The tolerance scales with max(1, ‖S‖²_max).

        Raises:
            NotSymplecticError: With the achieved residual.
        """
        out = cls(matrix, modes)
        residual = out.residual
        scale = max(1.0, float(np.max(np.abs(out.matrix))) ** 2)
        if residual > tol * scale:
            raise NotSymplecticError(
                f"matrix is not symplectic (residual {residual:.3e})",
                residual=residual)
        return out

    @classmethod
    def identity(cls, modes: ModeTable) -> 'SymplecticMatrix':
        return cls(np.eye(2 * modes.num_modes), modes)

    @property
    def residual(self) -> float:
        return symplectic_residual(self.matrix)

    def inverse(self) -> 'SymplecticMatrix':
        return SymplecticMatrix(symplectic_inverse(self.matrix), self.modes)

    def __matmul__(self, other: 'SymplecticMatrix') -> 'SymplecticMatrix':
        if other.modes != self.modes:
            raise StructuralError("cannot compose matrices on different mode tables")
        return SymplecticMatrix(self.matrix @ other.matrix, self.modes)

    def apply(self, state: GaussianState) -> GaussianState:
        if state.modes != self.modes:
            raise StructuralError("state and transformation have different mode tables")
        return apply_symplectic(state, self.matrix)
