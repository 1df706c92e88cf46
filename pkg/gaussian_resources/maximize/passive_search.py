"""
Passive Search Module

Stochastic search over passive unitaries for objectives with no closed-form
maximizer, such as the discord and the entanglement.

Classes:
    - PassiveSearchMaximizer: Best of Haar-random candidates, optionally
      refined by coordinate ascent over Givens rotations.

Functions:
    - givens_rotation: Two-mode rotation G_ij(θ, φ).
    - candidate_unitaries: The seeded candidate list.
    - passive_search: Functional form of the search.
"""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, NotComputableError
from ..quantify.correlations import is_pure
from ..symplectic.passive import PassiveUnitary
from ..symplectic.random_transforms import random_passive
from ..utils.logger_utils import logger_utility
from .base_maximizer import BaseMaximizer
from .outcome import MaximizerOutcome

__all__ = [
    'DEFAULT_SEARCH_BUDGET',
    'DEFAULT_SWEEPS',
    'givens_rotation',
    'candidate_unitaries',
    'PassiveSearchMaximizer',
    'passive_search',
]

DEFAULT_SEARCH_BUDGET = 500
DEFAULT_SWEEPS = 3

# The two phases generate SU(2) on a pair together with the rotation angle;
# local phases leave every objective unchanged.
_GIVENS_PHASES = (0.0, np.pi / 2)


def givens_rotation(num_modes: int, i: int, j: int, theta: float, phi: float) -> np.ndarray:
    """[[cos θ, −e^{iφ} sin θ], [e^{−iφ} sin θ, cos θ]] on modes i, j."""
    G = np.eye(num_modes, dtype=complex)
    c, s = np.cos(theta), np.sin(theta)
    G[i, i] = c
    G[i, j] = -np.exp(1j * phi) * s
    G[j, i] = np.exp(-1j * phi) * s
    G[j, j] = c
    return G


def candidate_unitaries(modes: ModeTable, budget: int, seed: int) -> List[PassiveUnitary]:
    """
    Candidate 0 is the identity; candidate j draws from the j-th child of
    ``SeedSequence(seed)``, so a larger budget only appends candidates.
    """
    if budget < 1:
        raise InvalidParameterError(f"search budget must be positive, got {budget}")
    children = np.random.SeedSequence(seed).spawn(budget)
    candidates = [PassiveUnitary.identity(modes)]
    candidates += [random_passive(modes, np.random.default_rng(child))
                   for child in children[1:]]
    return candidates


class PassiveSearchMaximizer(BaseMaximizer):
    """
    PassiveSearchMaximizer

    Attributes:
        budget (int): Number of candidates, identity included.
        seed (int): Root of the seed sequence.
        refine (bool): Run Givens coordinate ascent on the best candidate.
        workers (int): Threads evaluating candidates.
        sweeps (int): Coordinate-ascent sweeps.
    """
    method = 'search'

    def __init__(self, objective='coherence', bipartition=None, logger=None,
                 budget: int = DEFAULT_SEARCH_BUDGET, seed: int = 0,
                 refine: bool = False, workers: int = 1, sweeps: int = DEFAULT_SWEEPS):
        super().__init__(objective, bipartition, logger)
        if workers < 1:
            raise InvalidParameterError(f"workers must be positive, got {workers}")
        self.budget = int(budget)
        self.seed = int(seed)
        self.refine = refine
        self.workers = int(workers)
        self.sweeps = int(sweeps)

    def _scores(self, state: GaussianState, candidates: Sequence[PassiveUnitary]) -> np.ndarray:
        def score(U: PassiveUnitary) -> float:
            return self.evaluate(U.apply(state))

        if self.workers == 1:
            return np.array([score(U) for U in candidates])
        # map keeps candidate order, so ties resolve to the lowest index
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return np.array(list(pool.map(score, candidates)))

    def _refine(self, state: GaussianState, U: PassiveUnitary, best: float) -> PassiveUnitary:
        modes = state.modes
        M = modes.num_modes
        current = U.unitary

        def value(matrix: np.ndarray) -> float:
            return self.evaluate(PassiveUnitary(matrix, modes).apply(state))

        for sweep in range(self.sweeps):
            start = best
            for k in range(modes.num_frequencies):
                for i, j in combinations(modes.sector_indices(k), 2):
                    for phi in _GIVENS_PHASES:
                        res = minimize_scalar(
                            lambda t: -value(givens_rotation(M, i, j, t, phi) @ current),
                            bounds=(-np.pi, np.pi), method='bounded',
                            options={'xatol': 1e-10})
                        if -res.fun > best:
                            best = -res.fun
                            current = givens_rotation(M, i, j, res.x, phi) @ current
            self.logger.debug(f"refine sweep {sweep}: {start:.12g} -> {best:.12g}")
        return PassiveUnitary(current, modes)

    def transform(self, state: GaussianState) -> PassiveUnitary:
        if self.objective == 'entanglement' and not is_pure(state):
            raise NotComputableError("the entanglement objective needs a pure state")
        candidates = candidate_unitaries(state.modes, self.budget, self.seed)
        scores = self._scores(state, candidates)
        index = int(np.argmax(scores))
        self.logger.debug(
            f"search over {self.budget} candidates: best #{index} = {scores[index]:.12g}")
        best = candidates[index]
        if self.refine:
            best = self._refine(state, best, float(scores[index]))
        return best


@logger_utility.log_debug
def passive_search(
        s: GaussianState,
        objective: str = 'coherence',
        budget: int = DEFAULT_SEARCH_BUDGET,
        seed: int = 0,
        refine: bool = False,
        bipartition: Optional[Sequence[int]] = None,
        workers: int = 1) -> MaximizerOutcome:
    """
    Best-of-budget search over passive unitaries.

    Args:
        s (GaussianState): The state.
        objective (str): 'coherence', 'discord' or 'entanglement'.
        budget (int): Number of candidates, identity included.
        seed (int): Root seed.
        refine (bool): Refine the winner by Givens coordinate ascent.
        bipartition (Sequence[int], optional): Cut for the entanglement.
        workers (int): Threads evaluating candidates.

    Returns:
        MaximizerOutcome: The best transform. Equal seeds and budgets give
        identical outcomes, independent of ``workers``.

    Raises:
        InvalidParameterError: For a zero budget.
        NotComputableError: For the entanglement of a mixed state.
    """
    return PassiveSearchMaximizer(
        objective, bipartition, budget=budget, seed=seed,
        refine=refine, workers=workers).maximize(s)
