"""
Gaussian State Module

This module provides the universal state carrier of the toolkit.

Conventions: quadratures are ordered q₁, p₁, q₂, p₂, …; the covariance matrix
is normalised so that the vacuum has V = I and a thermal mode V = (2n̄+1)I;
ħ = 1.

Classes:
    - GaussianState: Displacement vector and covariance matrix over a ModeTable.
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import StructuralError
from .mode_table import ModeTable

__all__ = ['GaussianState']


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=float, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class GaussianState:
    """
    A Gaussian state given by its first and second moments.

    Attributes:
        modes (ModeTable): Frequency/spatial bookkeeping of the 2M quadratures.
        displacement (np.ndarray): Real vector d of length 2M.
        covariance (np.ndarray): Real 2M×2M matrix V.

    The arrays are copied and made read-only on construction. Physicality is
    not enforced here; use ``validate_state``.

    Raises:
        StructuralError: If the array shapes do not match the mode table.
    """
    modes: ModeTable
    displacement: np.ndarray
    covariance: np.ndarray

    def __post_init__(self):
        if not isinstance(self.modes, ModeTable):
            raise StructuralError("modes must be a ModeTable")
        dim = 2 * self.modes.num_modes
        d = np.asarray(self.displacement)
        V = np.asarray(self.covariance)
        if np.iscomplexobj(d) or np.iscomplexobj(V):
            raise StructuralError("displacement and covariance must be real")
        if d.shape != (dim,):
            raise StructuralError(
                f"displacement has shape {d.shape}, expected ({dim},)",
                expected=dim)
        if V.shape != (dim, dim):
            raise StructuralError(
                f"covariance has shape {V.shape}, expected ({dim}, {dim})",
                expected=dim)
        object.__setattr__(self, 'displacement', _frozen(d))
        object.__setattr__(self, 'covariance', _frozen(V))

    @classmethod
    def vacuum(cls, modes: ModeTable) -> 'GaussianState':
        dim = 2 * modes.num_modes
        return cls(modes, np.zeros(dim), np.eye(dim))

    @property
    def num_modes(self) -> int:
        return self.modes.num_modes

    def mode_block(self, m: int) -> np.ndarray:
        """The 2×2 covariance block V_m of mode m."""
        self.modes.check_index(m)
        return self.covariance[2 * m:2 * m + 2, 2 * m:2 * m + 2]

    def with_moments(self, displacement=None, covariance=None) -> 'GaussianState':
        """Copy on the same mode table with replaced moments."""
        return GaussianState(
            self.modes,
            self.displacement if displacement is None else displacement,
            self.covariance if covariance is None else covariance)

    def allclose(self, other: 'GaussianState', atol: float = 1e-9) -> bool:
        """Equality of moments within ``atol`` in max-norm on equal tables."""
        return (self.modes == other.modes
                and np.allclose(self.displacement, other.displacement, rtol=0, atol=atol)
                and np.allclose(self.covariance, other.covariance, rtol=0, atol=atol))

    def __repr__(self) -> str:
        return (f"GaussianState(M={self.num_modes}, omegas={self.modes.omegas}, "
                f"sector_sizes={self.modes.sector_sizes})")
