# maximizers.py
"""
Maximizers Mapping Submodule

This module defines the mapping of method names to their maximizer classes.
"""

from typing import Dict, Type

from ..exceptions import StructuralError
from .base_maximizer import BaseMaximizer
from .equidistribution import BeamSplitterMaximizer, QFTMaximizer, SpectralMaximizer
from .passive_search import PassiveSearchMaximizer

__all__ = ['MAXIMIZERS', 'get_maximizer']

MAXIMIZERS: Dict[str, Type[BaseMaximizer]] = {
    'search': PassiveSearchMaximizer,
    'beam-splitter': BeamSplitterMaximizer,
    'qft': QFTMaximizer,
    'spectral': SpectralMaximizer,
}


def get_maximizer(method: str, **options) -> BaseMaximizer:
    """
    Instantiates the maximizer registered under ``method``.

    Args:
        method (str): A key of ``MAXIMIZERS``.
        **options: Constructor arguments of that maximizer.

    Raises:
        StructuralError: For an unknown method.
    """
    try:
        maximizer_class = MAXIMIZERS[method]
    except KeyError:
        raise StructuralError(f"unknown method {method!r}; expected one of {sorted(MAXIMIZERS)}")
    return maximizer_class(**options)
