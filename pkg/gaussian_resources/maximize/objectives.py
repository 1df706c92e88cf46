"""
Objectives Mapping Submodule

This module defines the mapping of objective tags to the quantifier they
maximize.
"""

from typing import Callable, Dict, Optional, Sequence

from ..core.gaussian_state import GaussianState
from ..exceptions import StructuralError
from ..quantify.coherence import coherence_rel
from ..quantify.correlations import discord_rel, entanglement_pure

__all__ = ['OBJECTIVES', 'objective_value']

Objective = Callable[[GaussianState, Optional[Sequence[int]]], float]


def _entanglement(state: GaussianState, bipartition: Optional[Sequence[int]]) -> float:
    if bipartition is None:
        raise StructuralError("the entanglement objective needs a bipartition")
    return entanglement_pure(state, bipartition)


OBJECTIVES: Dict[str, Objective] = {
    'coherence': lambda state, bipartition: coherence_rel(state),
    'discord': lambda state, bipartition: discord_rel(state),
    'entanglement': _entanglement,
}


def objective_value(tag: str, state: GaussianState,
                    bipartition: Optional[Sequence[int]] = None) -> float:
    try:
        objective = OBJECTIVES[tag]
    except KeyError:
        raise StructuralError(f"unknown objective {tag!r}; expected one of {sorted(OBJECTIVES)}")
    return objective(state, bipartition)
