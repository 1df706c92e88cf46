"""
Symplectic Linear Algebra Package

Symplectic spectral machinery: symplectic eigenvalues, the Williamson and
Bloch-Messiah decompositions, passive-unitary construction and
classification, elementary elements and random transformation generators.

Modules:
    - eigenvalues.py: Symplectic eigenvalues.
    - symplectic_matrix.py: SymplecticMatrix value type.
    - passive.py: PassiveUnitary and classification.
    - williamson.py: Williamson normal form.
    - bloch_messiah.py: Bloch-Messiah decomposition.
    - elementary.py: Squeezers, phase shifters, beam splitters and the QFT.
    - random_transforms.py: Seeded Haar and symplectic sampling.
"""

from . import eigenvalues as _eigenvalues
from . import symplectic_matrix as _symplectic_matrix
from . import passive as _passive
from . import williamson as _williamson
from . import bloch_messiah as _bloch_messiah
from . import elementary as _elementary
from . import random_transforms as _random_transforms

from .eigenvalues import *
from .symplectic_matrix import *
from .passive import *
from .williamson import *
from .bloch_messiah import *
from .elementary import *
from .random_transforms import *

__all__ = (
    _eigenvalues.__all__ +
    _symplectic_matrix.__all__ +
    _passive.__all__ +
    _williamson.__all__ +
    _bloch_messiah.__all__ +
    _elementary.__all__ +
    _random_transforms.__all__
    )
