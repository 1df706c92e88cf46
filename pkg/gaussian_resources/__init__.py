"""
Gaussian Resources Package

This package quantifies the resources of multimode Gaussian states at fixed
energy: coherence, non-uniformity, discord and entanglement. It provides the
symplectic decompositions these quantifiers rest on, the passive unitaries
that maximize coherence, and a command line for batch evaluation and seeded
hierarchy sweeps.

Conventions: qpqp quadrature ordering, vacuum covariance V = I, ħ = 1 and
0-based flat mode indices, frequency-major.

Modules:
    - core: Mode tables, the GaussianState value type and occupations.
    - symplectic: Symplectic eigenvalues, Williamson and Bloch-Messiah
      decompositions, passive unitaries and elementary transforms.
    - states: Thermal, uniform, pure and random state constructors.
    - channels: Gaussian channels with the IG and GN classes.
    - quantify: Entropic quantifiers and the hierarchy report.
    - maximize: Coherence-maximizing passive unitaries and the passive search.
    - cli: Command-line front-end.
    - utils: Logging, error handling, settings and file formats.
"""

from . import exceptions
from . import utils
from . import core
from . import symplectic
from . import states
from . import channels
from . import quantify
from . import maximize

from .exceptions import *
from .utils import *
from .core import *
from .symplectic import *
from .states import *
from .channels import *
from .quantify import *
from .maximize import *

__all__ = (
    exceptions.__all__ +
    utils.__all__ +
    core.__all__ +
    symplectic.__all__ +
    states.__all__ +
    channels.__all__ +
    quantify.__all__ +
    maximize.__all__
    )
