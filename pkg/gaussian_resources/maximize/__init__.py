"""
Maximizers Package

Passive unitaries that maximize coherence at fixed energy, and a seeded
search for the objectives without a closed-form maximizer.

Modules:
    - outcome.py: MaximizerOutcome and the energy-preservation check.
    - objectives.py: OBJECTIVES registry.
    - base_maximizer.py: BaseMaximizer strategy interface.
    - equidistribution.py: Beam-splitter, Fourier and spectral maximizers.
    - passive_search.py: Haar-random search with Givens refinement.
    - certificate.py: Equidistribution certificate and concentrated-energy curve.
    - maximizers.py: MAXIMIZERS registry.
"""

from . import outcome as _outcome
from . import objectives as _objectives
from . import base_maximizer as _base_maximizer
from . import equidistribution as _equidistribution
from . import passive_search as _passive_search
from . import certificate as _certificate
from . import maximizers as _maximizers

from .outcome import *
from .objectives import *
from .base_maximizer import *
from .equidistribution import *
from .passive_search import *
from .certificate import *
from .maximizers import *

__all__ = (
    _outcome.__all__ +
    _objectives.__all__ +
    _base_maximizer.__all__ +
    _equidistribution.__all__ +
    _passive_search.__all__ +
    _certificate.__all__ +
    _maximizers.__all__
    )
