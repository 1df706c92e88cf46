"""
Channels Package

Gaussian channels (T, N, v) with complete-positivity checking, plus the
incoherent Gaussian (IG) and Gaussian noisy (GN) classes and the
uniformity-preserving test.

Modules:
    - gaussian_channel.py: GaussianChannel, validation, application, composition.
    - incoherent.py: IG channels.
    - noisy.py: GN channels from a uniform-environment dilation.
    - uniformity.py: Uniformity-preservation test.
"""

from . import gaussian_channel
from . import incoherent
from . import noisy
from . import uniformity

from .gaussian_channel import *
from .incoherent import *
from .noisy import *
from .uniformity import *

__all__ = (
    gaussian_channel.__all__ +
    incoherent.__all__ +
    noisy.__all__ +
    uniformity.__all__
    )
