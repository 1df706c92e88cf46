"""
Base Maximizer Module

This module provides a base class for the strategies that search passive
unitaries maximizing a resource.

Classes:
    - BaseMaximizer: Shared objective handling and outcome construction.
"""

import logging
from typing import Optional, Sequence

from ..core.gaussian_state import GaussianState
from ..exceptions import StructuralError
from ..quantify.coherence import coherence_max
from ..symplectic.passive import PassiveUnitary
from ..utils.error_utils import helper_quantifier_error
from ..utils.logger_utils import logger_utility
from .objectives import OBJECTIVES, objective_value
from .outcome import MaximizerOutcome, check_energy_preserved

__all__ = ['BaseMaximizer']


class BaseMaximizer(object):
    """
    Base class for passive-unitary maximizers.

    Attributes:
        objective (str): Objective tag, a key of ``OBJECTIVES``.
        bipartition (Sequence[int], optional): Cut for the entanglement objective.
        logger (logging.Logger): The logger for logging messages and errors.
    """
    method: str = 'base'

    def __init__(self,
                 objective: str = 'coherence',
                 bipartition: Optional[Sequence[int]] = None,
                 logger: logging.Logger = None):
        """Initialises the maximizer.

        Args:
            objective (str): Objective tag. Defaults to 'coherence'.
            bipartition (Sequence[int], optional): Modes on one side of the cut.
            logger (logging.Logger, optional): Defaults to the package logger.
        """
        if objective not in OBJECTIVES:
            raise StructuralError(
                f"unknown objective {objective!r}; expected one of {sorted(OBJECTIVES)}")
        self.objective = objective
        self.bipartition = None if bipartition is None else tuple(int(m) for m in bipartition)
        self.logger: logging.Logger = logger if logger else logger_utility.logger

    def evaluate(self, state: GaussianState) -> float:
        return objective_value(self.objective, state, self.bipartition)

    def transform(self, state: GaussianState) -> PassiveUnitary:
        """The passive unitary to apply, to be overridden by subclasses."""
        raise NotImplementedError("Subclasses should implement this method")

    @helper_quantifier_error
    def maximize(self, state: GaussianState) -> MaximizerOutcome:
        """
        Finds the transform and measures what it achieves.

        Args:
            state (GaussianState): The input state.

        Returns:
            MaximizerOutcome: The transform, its value and the gap to C_max.

        Raises:
            ToleranceError: If the transform changed the energy of a sector.
        """
        U = self.transform(state)
        return self.outcome(state, U)

    def outcome(self, state: GaussianState, U: PassiveUnitary) -> MaximizerOutcome:
        after = U.apply(state)
        check_energy_preserved(state, after)
        achieved = self.evaluate(after)
        target = coherence_max(state)
        self.logger.debug(
            f"{self.__class__.__name__}: {self.objective} = {achieved:.12g}, "
            f"ceiling {target:.12g}")
        return MaximizerOutcome(
            objective=self.objective,
            method=self.method,
            transform=U,
            initial=self.evaluate(state),
            achieved=achieved,
            target=target,
            gap=target - achieved,
            state=after,
        )
