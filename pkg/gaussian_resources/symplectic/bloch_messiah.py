"""
Bloch-Messiah Decomposition Module

Every symplectic matrix factors as S = O₁ [⊕ Z(r_m)] O₂ with O₁, O₂
orthogonal-symplectic and Z(r) = diag(e^{−r}, e^{r}).

Classes:
    - BlochMessiahResult: Factors, squeezing parameters and residual.

Functions:
    - bloch_messiah: Computes the decomposition.
"""

from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np
from scipy.linalg import eigh, null_space, polar

from ..core.mode_table import ModeTable
from ..core.symplectic_form import symplectic_form
from ..exceptions import NotSymplecticError, ToleranceError
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL
from .passive import is_frequency_block_diagonal
from .symplectic_matrix import SymplecticMatrix, symplectic_residual

__all__ = ['BlochMessiahResult', 'bloch_messiah', 'squeezing_matrix']

logger = logger_utility.logger


def squeezing_matrix(r: np.ndarray) -> np.ndarray:
    """⊕_m Z(r_m)."""
    r = np.asarray(r, dtype=float)
    return np.diag(np.stack([np.exp(-r), np.exp(r)], axis=1).reshape(-1))


@dataclass(frozen=True, eq=False)
class BlochMessiahResult:
    """
    Attributes:
        O1 (np.ndarray): Left orthogonal-symplectic factor.
        O2 (np.ndarray): Right orthogonal-symplectic factor.
        r (np.ndarray): Squeezing parameters r_m ≥ 0, sorted descending.
        residual (float): ‖O₁ Z O₂ − S‖_max.
        o1_passive (bool): O₁ is frequency-block-diagonal.
        o2_passive (bool): O₂ is frequency-block-diagonal.
    """
    O1: np.ndarray
    O2: np.ndarray
    r: np.ndarray
    residual: float
    o1_passive: bool
    o2_passive: bool

    def to_dict(self) -> dict:
        return {
            'r': self.r.tolist(),
            'O1': self.O1.tolist(),
            'O2': self.O2.tolist(),
            'residual': self.residual,
            'o1_passive': self.o1_passive,
            'o2_passive': self.o2_passive,
        }


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    return v if v[np.argmax(np.abs(v))] >= 0 else -v


def _symplectic_basis(P: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """
    Orthogonal-symplectic O₁ whose block columns (Ωv, v) diagonalise P.

    Eigenvectors v of the symmetric symplectic P with eigenvalue e^{r} ≥ 1
    are taken in descending order; Ωv then carries e^{−r}. Vectors of the
    unsqueezed cluster are completed by symplectic Gram-Schmidt.
    """
    dim = P.shape[0]
    sigma, vectors = eigh(P)
    chosen: List[np.ndarray] = []

    def accept(v: np.ndarray) -> bool:
        if chosen:
            C = np.stack(chosen, axis=1)
            v = v - C @ (C.T @ v)
        norm = np.linalg.norm(v)
        if norm < 0.5:
            return False
        w = _canonical_sign(v / norm)
        chosen.extend([omega @ w, w])
        return True

    for idx in np.argsort(-sigma, kind='stable'):
        if len(chosen) == dim or sigma[idx] < 1.0:
            break
        accept(vectors[:, idx])

    while len(chosen) < dim:
        C = np.stack(chosen, axis=1) if chosen else np.zeros((dim, 0))
        rest = null_space(C.T) if chosen else np.eye(dim)
        # pivot on the complement vector least covered by the chosen span
        candidates = rest - C @ (C.T @ rest)
        pick = int(np.argmax(np.linalg.norm(candidates, axis=0)))
        if not accept(candidates[:, pick]):
            raise ToleranceError("symplectic Gram-Schmidt stalled")

    return np.stack(chosen[:dim], axis=1)


def bloch_messiah(S: Union[np.ndarray, SymplecticMatrix],
                  tol: float = DEFAULT_TOL,
                  modes: Optional[ModeTable] = None) -> BlochMessiahResult:
    """
    Bloch-Messiah decomposition of a symplectic matrix.

    The polar decomposition S = P U splits off the orthogonal part; P is
    diagonalised by an orthogonal-symplectic O₁, giving O₁ᵀ P O₁ = ⊕ Z(r_m),
    and O₂ = O₁ᵀ U.

    Args:
        S (np.ndarray or SymplecticMatrix): The matrix.
        tol (float): Tolerance, scaled by max(1, ‖S‖_max) for the
            reconstruction and by max(1, ‖S‖²_max) for the symplectic test.
        modes (ModeTable, optional): Table used for the block-structure flags.

    Returns:
        BlochMessiahResult: Factors with r sorted descending.

    Raises:
        NotSymplecticError: If S Ω Sᵀ ≠ Ω within tolerance.
        ToleranceError: If the reconstruction residual exceeds tolerance.
    """
    if isinstance(S, SymplecticMatrix):
        modes = modes or S.modes
        S = S.matrix
    S = np.asarray(S, dtype=float)
    dim = S.shape[0]
    num_modes = dim // 2
    modes = modes or ModeTable.single_frequency(num_modes)
    omega = symplectic_form(num_modes)

    scale = max(1.0, float(np.max(np.abs(S))))
    sym_residual = symplectic_residual(S)
    if sym_residual > tol * scale ** 2:
        raise NotSymplecticError(
            f"matrix is not symplectic (residual {sym_residual:.3e})",
            residual=sym_residual)

    if float(np.max(np.abs(S @ S.T - np.eye(dim)))) <= tol:
        O1, O2, r = S.copy(), np.eye(dim), np.zeros(num_modes)
    else:
        U, P = polar(S, side='left')
        P = 0.5 * (P + P.T)
        O1 = _symplectic_basis(P, omega)
        D = O1.T @ P @ O1
        r = 0.5 * (np.log(np.diag(D)[1::2]) - np.log(np.diag(D)[0::2]))
        r = np.maximum(r, 0.0)
        order = np.argsort(-r, kind='stable')
        r = r[order]
        columns = np.stack([2 * order, 2 * order + 1], axis=1).reshape(-1)
        O1 = O1[:, columns]
        O2 = O1.T @ U

    residual = float(np.max(np.abs(O1 @ squeezing_matrix(r) @ O2 - S)))
    logger.debug(f"bloch_messiah: M={num_modes}, r={np.round(r, 6).tolist()}, "
                 f"residual={residual:.3e}")
    if residual > tol * scale:
        raise ToleranceError(
            f"Bloch-Messiah reconstruction residual {residual:.3e} exceeds tolerance",
            residual=residual, tol=tol * scale)

    return BlochMessiahResult(
        O1=O1, O2=O2, r=r, residual=residual,
        o1_passive=is_frequency_block_diagonal(O1, modes, tol),
        o2_passive=is_frequency_block_diagonal(O2, modes, tol),
    )
