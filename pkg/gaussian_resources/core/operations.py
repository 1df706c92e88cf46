"""
State Operations Module

Partial trace, tensor product and Gaussian-unitary action on states, and
conversion between quadrature orderings.

Functions:
    - reduced_state: Partial trace onto a set of modes.
    - tensor_product: Product state of two states on a merged mode table.
    - product_state: Folds tensor_product over several states.
    - apply_symplectic: d → S d, V → S V Sᵀ.
    - displace: d → d + v.
    - qqpp_to_qpqp / qpqp_to_qqpp: Permutation between orderings.
"""

from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from ..exceptions import StructuralError
from .gaussian_state import GaussianState
from .mode_table import merge_mode_tables, quadrature_indices

__all__ = [
    'reduced_state',
    'tensor_product',
    'product_state',
    'apply_symplectic',
    'displace',
    'qqpp_to_qpqp',
    'qpqp_to_qqpp',
]


def reduced_state(s: GaussianState, keep: Iterable[int]) -> GaussianState:
    """
    Partial trace over every mode not in ``keep``.

    Args:
        s (GaussianState): The state.
        keep (Iterable[int]): Flat indices of the retained modes.

    Returns:
        GaussianState: Sub-vector and sub-matrix on the retained quadrature
        pairs, over the retained mode table.

    Raises:
        StructuralError: If keep is empty or holds an invalid index.
    """
    table, kept = s.modes.subtable(keep)
    idx = quadrature_indices(kept)
    return GaussianState(table, s.displacement[idx],
                         s.covariance[np.ix_(idx, idx)])


def tensor_product(a: GaussianState, b: GaussianState) -> GaussianState:
    """
    a ⊗ b, re-sorted into frequency-major order.

    Within a shared frequency the modes of ``a`` come first, so
    ``reduced_state`` over the positions returned by ``merge_mode_tables``
    recovers each factor.
    """
    table, idx_a, idx_b = merge_mode_tables(a.modes, b.modes)
    dim = 2 * table.num_modes
    qa, qb = quadrature_indices(idx_a), quadrature_indices(idx_b)
    d = np.zeros(dim)
    V = np.zeros((dim, dim))
    d[qa], d[qb] = a.displacement, b.displacement
    V[np.ix_(qa, qa)] = a.covariance
    V[np.ix_(qb, qb)] = b.covariance
    return GaussianState(table, d, V)


def product_state(states: Sequence[GaussianState]) -> GaussianState:
    if not states:
        raise StructuralError("product of an empty list of states")
    return reduce(tensor_product, states)


def apply_symplectic(s: GaussianState, S: np.ndarray) -> GaussianState:
    """Action of a Gaussian unitary with symplectic matrix S."""
    S = np.asarray(S, dtype=float)
    dim = 2 * s.num_modes
    if S.shape != (dim, dim):
        raise StructuralError(
            f"symplectic matrix has shape {S.shape}, expected ({dim}, {dim})")
    return s.with_moments(S @ s.displacement, S @ s.covariance @ S.T)


def displace(s: GaussianState, v: np.ndarray) -> GaussianState:
    v = np.asarray(v, dtype=float)
    if v.shape != s.displacement.shape:
        raise StructuralError(
            f"displacement has shape {v.shape}, expected {s.displacement.shape}")
    return s.with_moments(displacement=s.displacement + v)


def _qqpp_permutation(num_modes: int) -> np.ndarray:
    # position in qqpp of the k-th qpqp coordinate
    perm = np.empty(2 * num_modes, dtype=int)
    perm[0::2] = np.arange(num_modes)
    perm[1::2] = num_modes + np.arange(num_modes)
    return perm


def qqpp_to_qpqp(vector: np.ndarray = None, matrix: np.ndarray = None):
    """Reorders a vector and/or matrix from (q…, p…) to (q, p, q, p, …)."""
    out = []
    for x in (vector, matrix):
        if x is None:
            continue
        x = np.asarray(x, dtype=float)
        if x.shape[0] % 2:
            raise StructuralError("quadrature arrays need even length")
        perm = _qqpp_permutation(x.shape[0] // 2)
        out.append(x[perm] if x.ndim == 1 else x[np.ix_(perm, perm)])
    return out[0] if len(out) == 1 else tuple(out)


def qpqp_to_qqpp(vector: np.ndarray = None, matrix: np.ndarray = None):
    """Inverse of ``qqpp_to_qpqp``."""
    out = []
    for x in (vector, matrix):
        if x is None:
            continue
        x = np.asarray(x, dtype=float)
        inv = np.argsort(_qqpp_permutation(x.shape[0] // 2))
        out.append(x[inv] if x.ndim == 1 else x[np.ix_(inv, inv)])
    return out[0] if len(out) == 1 else tuple(out)
