"""
Sweep Module

Seeded Monte-Carlo sweeps checking the resource hierarchy on random states.

Classes:
    - SweepConfig: Everything that determines the sweep output.

Functions:
    - sample_state: The i-th random state of a sweep.
    - sweep_rows: One CSV row per sample, in sample order.
    - run_sweep: Rows plus the CSV text; aborts on a hierarchy violation.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, ToleranceError
from ..quantify.resource_orchestrator import HIERARCHY_TOL, hierarchy_report
from ..states.random_states import random_pure_state, random_state
from ..utils.csv_utils import write_csv_with_header
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL

__all__ = ['CSV_VERSION', 'SWEEP_COLUMNS', 'SweepConfig', 'sample_state', 'sweep_rows', 'run_sweep']

CSV_VERSION = 1
SWEEP_COLUMNS = ('sample', 'P', 'C', 'C_max', 'D', 'E', 'hierarchy_ok', 'gap')


@dataclass(frozen=True)
class SweepConfig:
    """
    Attributes:
        modes (ModeTable): System of every sample.
        samples (int): Number of samples, at least 1.
        seed (int): Root of the per-sample seed sequence.
        r_max (float): Largest squeezing parameter.
        nbar_max (float): Largest thermal occupation.
        displacement_scale (float): Standard deviation of d.
        pure (bool): Sample pure states and evaluate the entanglement.
        bipartition (Tuple[int, ...], optional): Cut for pure samples.
        tol (float): Tolerance of each hierarchy inequality.
        state_tol (float): Physicality tolerance.
        log_base (str): 'e' or '2'.
    """
    modes: ModeTable
    samples: int
    seed: int
    r_max: float = 2.0
    nbar_max: float = 3.0
    displacement_scale: float = 1.0
    pure: bool = False
    bipartition: Optional[Tuple[int, ...]] = None
    tol: float = HIERARCHY_TOL
    state_tol: float = DEFAULT_TOL
    log_base: str = 'e'

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidParameterError(f"samples must be at least 1, got {self.samples}")
        if self.pure and self.bipartition is None and self.modes.num_modes > 1:
            object.__setattr__(self, 'bipartition', (0,))

    def header(self) -> dict:
        return {
            'columns_version': CSV_VERSION,
            'seed': self.seed,
            'samples': self.samples,
            'omegas': ','.join(repr(w) for w in self.modes.omegas),
            'sector_sizes': ','.join(str(n) for n in self.modes.sector_sizes),
            'r_max': repr(self.r_max),
            'nbar_max': repr(self.nbar_max),
            'displacement_scale': repr(self.displacement_scale),
            'pure': str(self.pure).lower(),
            'bipartition': '' if self.bipartition is None else ','.join(map(str, self.bipartition)),
            'log_base': self.log_base,
        }


def sample_state(config: SweepConfig, index: int) -> GaussianState:
    """Depends only on the seed and the index, never on the thread count."""
    child = np.random.SeedSequence(config.seed, spawn_key=(index,))
    rng = np.random.default_rng(child)
    if config.pure:
        return random_pure_state(config.modes, rng, config.r_max, config.displacement_scale)
    return random_state(config.modes, rng, config.r_max,
                        config.displacement_scale, config.nbar_max)


def _row(config: SweepConfig, index: int) -> list:
    report = hierarchy_report(
        sample_state(config, index),
        bipartition=config.bipartition if config.pure else None,
        log_base=config.log_base,
        tol=config.tol,
        state_tol=config.state_tol)
    return [index, report.nonuniformity, report.coherence, report.coherence_max,
            report.discord, report.entanglement, report.hierarchy_ok,
            report.nonuniformity_gap]


def sweep_rows(config: SweepConfig, workers: int = 1) -> List[list]:
    indices = range(config.samples)
    if workers <= 1:
        return [_row(config, i) for i in indices]
    # map preserves sample order
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: _row(config, i), indices))


@logger_utility.log_debug
def run_sweep(config: SweepConfig, workers: int = 1,
              file_path: Optional[str] = None) -> Tuple[List[list], str]:
    """
    Evaluates every sample and writes the CSV.

    Returns:
        Tuple[List[list], str]: The rows and the CSV text.

    Raises:
        ToleranceError: On the first sample violating the hierarchy, with
            the seed and sample index needed to reproduce it. Nothing is
            written in that case.
    """
    logger = logger_utility.logger
    rows = sweep_rows(config, workers)
    for row in rows:
        if not row[6]:
            P, C, D, E = row[1], row[2], row[4], row[5]
            residual = max(C - P, D - C, (E - D) if E is not None else -np.inf)
            raise ToleranceError(
                f"hierarchy violated at sample {row[0]}",
                residual=float(residual), tol=config.tol,
                seed=config.seed, sample=row[0])
    logger.info(f"sweep of {config.samples} samples passed the hierarchy check")
    text = write_csv_with_header(config.header(), SWEEP_COLUMNS, rows, file_path)
    return rows, text
