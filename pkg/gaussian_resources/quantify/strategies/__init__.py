"""
Quantifier Strategies

One strategy per resource quantifier, each exposing ``quantify(state)``.
"""

from .entropy_quantifier import EntropyQuantifier
from .coherence_quantifier import (
    CoherenceQuantifier,
    MaxCoherenceQuantifier,
    NonUniformityQuantifier,
    )
from .correlation_quantifier import DiscordQuantifier, EntanglementQuantifier

__all__ = [
    'EntropyQuantifier',
    'CoherenceQuantifier',
    'MaxCoherenceQuantifier',
    'NonUniformityQuantifier',
    'DiscordQuantifier',
    'EntanglementQuantifier',
]
