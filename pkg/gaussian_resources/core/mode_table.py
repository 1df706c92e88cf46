"""
Mode Table Module

Bookkeeping of the (ω; j) labels of a multimode bosonic system. Modes are
gathered by frequency: the flat index runs over (ω₁;1), …, (ω₁;M₁),
(ω₂;1), … with 0-based indices everywhere.

Classes:
    - ModeTable: Ordered frequencies and the number of spatial modes at each.

Functions:
    - merge_mode_tables: Joins two tables in frequency-major order.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..exceptions import StructuralError

__all__ = ['ModeTable', 'merge_mode_tables', 'quadrature_indices']

FREQUENCY_RTOL = 1e-12


def quadrature_indices(modes: Iterable[int]) -> np.ndarray:
    """Positions of (q_m, p_m) for each mode m in the qpqp ordering."""
    modes = np.asarray(list(modes), dtype=int)
    return np.stack([2 * modes, 2 * modes + 1], axis=1).reshape(-1)


@dataclass(frozen=True)
class ModeTable:
    """
    Frequencies and spatial-mode counts of a multimode system.

    Attributes:
        omegas (Tuple[float, ...]): Strictly increasing positive frequencies.
        sector_sizes (Tuple[int, ...]): Spatial modes carried by each frequency.
    """
    omegas: Tuple[float, ...]
    sector_sizes: Tuple[int, ...]

    def __post_init__(self):
        omegas = tuple(float(w) for w in self.omegas)
        sizes = tuple(int(n) for n in self.sector_sizes)
        object.__setattr__(self, 'omegas', omegas)
        object.__setattr__(self, 'sector_sizes', sizes)

        if not omegas:
            raise StructuralError("a mode table needs at least one frequency")
        if len(omegas) != len(sizes):
            raise StructuralError(
                f"{len(omegas)} frequencies but {len(sizes)} sector sizes")
        if not all(np.isfinite(w) and w > 0 for w in omegas):
            raise StructuralError(f"frequencies must be positive: {omegas}")
        if any(b <= a for a, b in zip(omegas, omegas[1:])):
            raise StructuralError(
                f"frequencies must be strictly increasing: {omegas}")
        if any(n < 1 for n in sizes):
            raise StructuralError(
                f"every frequency needs at least one spatial mode: {sizes}")

    @classmethod
    def regular(cls, omegas: Sequence[float], spatial_modes: int) -> 'ModeTable':
        """Table with the same number of spatial modes M_s at every frequency."""
        return cls(tuple(omegas), (int(spatial_modes),) * len(omegas))

    @classmethod
    def single_frequency(cls, spatial_modes: int, omega: float = 1.0) -> 'ModeTable':
        return cls((omega,), (spatial_modes,))

    @property
    def num_frequencies(self) -> int:
        """M_f."""
        return len(self.omegas)

    @property
    def num_modes(self) -> int:
        """M = Σ_ω M_ω."""
        return sum(self.sector_sizes)

    @property
    def is_regular(self) -> bool:
        return len(set(self.sector_sizes)) == 1

    @property
    def spatial_modes(self) -> int:
        """M_s, defined when every frequency carries the same count."""
        if not self.is_regular:
            raise StructuralError(
                f"sector sizes {self.sector_sizes} differ; M_s is undefined")
        return self.sector_sizes[0]

    @property
    def sector_offsets(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in np.concatenate(
            [[0], np.cumsum(self.sector_sizes)[:-1]]))

    def sector_indices(self, k: int) -> range:
        """Flat indices of the modes at frequency index k."""
        if not 0 <= k < self.num_frequencies:
            raise StructuralError(f"frequency index {k} out of range")
        start = self.sector_offsets[k]
        return range(start, start + self.sector_sizes[k])

    @property
    def mode_sectors(self) -> np.ndarray:
        """Frequency index of every flat mode."""
        return np.repeat(np.arange(self.num_frequencies), self.sector_sizes)

    @property
    def mode_frequencies(self) -> np.ndarray:
        """ω of every flat mode."""
        return np.asarray(self.omegas)[self.mode_sectors]

    def label(self, m: int) -> Tuple[int, int]:
        """Maps a flat index to (frequency index, spatial index)."""
        self.check_index(m)
        k = int(self.mode_sectors[m])
        return k, m - self.sector_offsets[k]

    def flat_index(self, k: int, j: int) -> int:
        """Maps (frequency index, spatial index) to the flat index."""
        if not 0 <= k < self.num_frequencies or not 0 <= j < self.sector_sizes[k]:
            raise StructuralError(f"label ({k}; {j}) not in table")
        return self.sector_offsets[k] + j

    def check_index(self, m: int) -> None:
        if not 0 <= int(m) < self.num_modes:
            raise StructuralError(
                f"mode index {m} out of range for {self.num_modes} modes")

    def same_frequency(self, modes: Iterable[int]) -> bool:
        modes = list(modes)
        for m in modes:
            self.check_index(m)
        return len({int(self.mode_sectors[m]) for m in modes}) <= 1

    def subtable(self, keep: Iterable[int]) -> Tuple['ModeTable', List[int]]:
        """
        Table of the retained modes.

        Frequencies with no surviving mode are dropped.

        Args:
            keep (Iterable[int]): Flat indices to retain.

        Returns:
            tuple: The new table and the retained indices in ascending order.

        Raises:
            StructuralError: If keep is empty or holds an invalid index.
        """
        kept = sorted({int(m) for m in keep})
        if not kept:
            raise StructuralError("cannot keep an empty set of modes")
        for m in kept:
            self.check_index(m)
        sectors = self.mode_sectors[kept]
        omegas, sizes = [], []
        for k in range(self.num_frequencies):
            count = int(np.sum(sectors == k))
            if count:
                omegas.append(self.omegas[k])
                sizes.append(count)
        return ModeTable(tuple(omegas), tuple(sizes)), kept

    def to_dict(self) -> dict:
        data = {'omegas': list(self.omegas)}
        if self.is_regular:
            data['spatial_modes'] = self.spatial_modes
        else:
            data['sector_sizes'] = list(self.sector_sizes)
        return data


def merge_mode_tables(a: ModeTable, b: ModeTable
                      ) -> Tuple[ModeTable, np.ndarray, np.ndarray]:
    """
    Joins two mode tables in frequency-major order.

    Frequencies equal within a relative 1e-12 share a sector, where the modes
    of ``a`` precede those of ``b``.

    Args:
        a (ModeTable): First table.
        b (ModeTable): Second table.

    Returns:
        tuple: The merged table and the flat positions, in the merged table,
        of the modes of ``a`` and of ``b``.
    """
    merged: List[float] = []
    for w in sorted(a.omegas + b.omegas):
        if merged and np.isclose(w, merged[-1], rtol=FREQUENCY_RTOL, atol=0.0):
            continue
        merged.append(w)

    def sector_of(table: ModeTable) -> List[int]:
        return [next(i for i, w in enumerate(merged)
                     if np.isclose(w, omega, rtol=FREQUENCY_RTOL, atol=0.0))
                for omega in table.omegas]

    a_map, b_map = sector_of(a), sector_of(b)
    a_sizes = np.zeros(len(merged), dtype=int)
    b_sizes = np.zeros(len(merged), dtype=int)
    a_sizes[a_map] = a.sector_sizes
    b_sizes[b_map] = b.sector_sizes
    table = ModeTable(tuple(merged), tuple(int(x) for x in a_sizes + b_sizes))

    offsets = table.sector_offsets
    idx_a = np.concatenate([
        offsets[a_map[k]] + np.arange(size)
        for k, size in enumerate(a.sector_sizes)]).astype(int)
    idx_b = np.concatenate([
        offsets[b_map[k]] + a_sizes[b_map[k]] + np.arange(size)
        for k, size in enumerate(b.sector_sizes)]).astype(int)
    return table, idx_a, idx_b
