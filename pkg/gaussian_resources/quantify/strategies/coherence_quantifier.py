"""
Coherence Quantifiers

This module provides the strategies measuring coherence against thermal
references.

Classes:
    - CoherenceQuantifier: Relative entropy of coherence C_rel.
    - MaxCoherenceQuantifier: Maximal coherence at fixed energy C_max.
    - NonUniformityQuantifier: Relative entropy of non-uniformity P_rel.
"""
from typing import Optional, Sequence

from ..base_quantifier import BaseQuantifier
from ..coherence import coherence_max, coherence_rel, nonuniformity_rel
from ...utils.error_utils import helper_quantifier_error

__all__ = ['CoherenceQuantifier', 'MaxCoherenceQuantifier', 'NonUniformityQuantifier']


class CoherenceQuantifier(BaseQuantifier):
    """
    CoherenceQuantifier

    Distance to the thermal state with the same mode occupations.
    """
    @helper_quantifier_error
    def quantify(self, state) -> float:
        value = coherence_rel(state)
        self.logger.debug(f"C_rel = {value:.12g}")
        return value


class MaxCoherenceQuantifier(BaseQuantifier):
    """
    MaxCoherenceQuantifier

    Coherence after the best energy-preserving passive unitary.
    """
    @helper_quantifier_error
    def quantify(self, state) -> float:
        value = coherence_max(state)
        self.logger.debug(f"C_max = {value:.12g}")
        return value


class NonUniformityQuantifier(BaseQuantifier):
    """
    NonUniformityQuantifier

    Distance to the uniform state at the state's own energy, or at a fixed
    reference δ when one is supplied.

    Attributes:
        reference_delta (Sequence[float], optional): δ_ω of the reference.
    """
    def __init__(self, logger=None, reference_delta: Optional[Sequence[float]] = None):
        super().__init__(logger)
        self.reference_delta = reference_delta

    @helper_quantifier_error
    def quantify(self, state) -> float:
        value = nonuniformity_rel(state, self.reference_delta)
        self.logger.debug(f"P_rel = {value:.12g}")
        return value
