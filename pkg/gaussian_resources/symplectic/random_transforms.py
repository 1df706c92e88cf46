"""
Random Transforms Module

Seeded generators of random passive unitaries and random symplectic matrices.
Every function takes a seed or a numpy Generator; nothing reads global state.

Functions:
    - haar_unitary: Haar-distributed n×n unitary.
    - random_passive: Haar-random unitary in each frequency sector.
    - random_symplectic: O₁ [⊕ Z(r_m)] O₂ with Haar-passive O_i.
    - random_transform: Dispatches on kind.
"""

from typing import Union

import numpy as np
from scipy.linalg import block_diag, qr

from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, StructuralError
from .bloch_messiah import squeezing_matrix
from .passive import PassiveUnitary
from .symplectic_matrix import SymplecticMatrix

__all__ = [
    'RngLike',
    'as_generator',
    'haar_unitary',
    'random_passive',
    'random_symplectic',
    'random_transform',
    'DEFAULT_R_MAX',
]

RngLike = Union[None, int, np.random.SeedSequence, np.random.Generator]

DEFAULT_R_MAX = 2.0


def as_generator(rng: RngLike) -> np.random.Generator:
    """Generator from a seed, a SeedSequence or an existing Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def haar_unitary(n: int, rng: RngLike = None) -> np.ndarray:
    """
    Haar-random unitary: QR of a complex Ginibre matrix with the phases of
    diag(R) absorbed into Q.
    """
    rng = as_generator(rng)
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    Q, R = qr(Z)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_passive(modes: ModeTable, rng: RngLike = None) -> PassiveUnitary:
    """Block-diagonal Haar unitary, one block per frequency sector."""
    rng = as_generator(rng)
    blocks = [haar_unitary(n, rng) for n in modes.sector_sizes]
    return PassiveUnitary(block_diag(*blocks), modes)


def random_symplectic(modes: ModeTable, rng: RngLike = None,
                      r_max: float = DEFAULT_R_MAX) -> SymplecticMatrix:
    """O₁ [⊕ Z(r_m)] O₂ with r_m uniform on [0, r_max]."""
    if r_max < 0:
        raise InvalidParameterError(f"r_max must be non-negative, got {r_max}")
    rng = as_generator(rng)
    O1 = random_passive(modes, rng).orthogonal
    r = rng.uniform(0.0, r_max, size=modes.num_modes)
    O2 = random_passive(modes, rng).orthogonal
    return SymplecticMatrix(O1 @ squeezing_matrix(r) @ O2, modes)


def random_transform(kind: str, modes: ModeTable, rng: RngLike = None,
                     r_max: float = DEFAULT_R_MAX):
    """
    Random transformation of the requested kind.

    Args:
        kind (str): 'passive_haar' or 'symplectic'.
        modes (ModeTable): Table acted on.
        rng: Seed or Generator.
        r_max (float): Squeezing bound for 'symplectic'.

    Returns:
        PassiveUnitary or SymplecticMatrix.
    """
    if kind == 'passive_haar':
        return random_passive(modes, rng)
    if kind == 'symplectic':
        return random_symplectic(modes, rng, r_max)
    raise StructuralError(f"unknown transform kind {kind!r}")
