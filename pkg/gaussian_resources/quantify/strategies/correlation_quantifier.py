"""
Correlation Quantifiers

This module provides the strategies measuring correlations between modes.

Classes:
    - DiscordQuantifier: Symmetric Gaussian discord D_rel.
    - EntanglementQuantifier: Entanglement of pure states across a bipartition.
"""
from typing import Optional, Sequence

from ..base_quantifier import BaseQuantifier
from ..correlations import discord_rel, entanglement_pure, is_pure
from ...utils.error_utils import helper_quantifier_error

__all__ = ['DiscordQuantifier', 'EntanglementQuantifier']


class DiscordQuantifier(BaseQuantifier):
    """
    DiscordQuantifier

    Distance to the closest product Gaussian state.
    """
    @helper_quantifier_error
    def quantify(self, state) -> float:
        value = discord_rel(state)
        self.logger.debug(f"D_rel = {value:.12g}")
        return value


class EntanglementQuantifier(BaseQuantifier):
    """
    EntanglementQuantifier

    Exact only for globally pure states. Returns None when no bipartition
    was declared or the state is mixed, leaving the caller to fall back on
    the discord as an upper bound.

    Attributes:
        bipartition (Sequence[int], optional): Modes on one side of the cut.
    """
    def __init__(self, logger=None, bipartition: Optional[Sequence[int]] = None):
        super().__init__(logger)
        self.bipartition = None if bipartition is None else tuple(bipartition)

    @helper_quantifier_error
    def quantify(self, state) -> Optional[float]:
        if self.bipartition is None:
            return None
        if not is_pure(state):
            self.logger.debug("mixed state: entanglement is bound-only")
            return None
        value = entanglement_pure(state, self.bipartition)
        self.logger.debug(f"E_rel{list(self.bipartition)} = {value:.12g}")
        return value
