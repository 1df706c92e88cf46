"""
States Factory Package

Constructs the named Gaussian states used throughout the toolkit.

Modules:
    - temperature.py: Bose-Einstein temperature/occupation mapping.
    - thermal.py: Thermal and uniform states.
    - pure.py: Coherent, squeezed and two-mode squeezed states.
    - random_states.py: Seeded random states.
"""

from . import temperature
from . import thermal
from . import pure
from . import random_states

from .temperature import *
from .thermal import *
from .pure import *
from .random_states import *

__all__ = (
    temperature.__all__ +
    thermal.__all__ +
    pure.__all__ +
    random_states.__all__
    )
