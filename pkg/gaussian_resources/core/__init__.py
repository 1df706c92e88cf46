"""
Phase-Space Core Package

This subpackage defines the Gaussian-state data model, the mode bookkeeping
and the elementary state-level observables every other package consumes.

Modules:
    - mode_table.py: ModeTable and the frequency-major flat indexing.
    - gaussian_state.py: GaussianState value type.
    - symplectic_form.py: The symplectic form Ω.
    - occupation.py: Occupation numbers, occupation matrix and pair correlators.
    - operations.py: Partial trace, tensor product and unitary action.
    - validation.py: Physicality checks.
"""

from . import mode_table as _mode_table
from . import gaussian_state as _gaussian_state
from . import symplectic_form as _symplectic_form
from . import occupation as _occupation
from . import operations as _operations
from . import validation as _validation

from .mode_table import *
from .gaussian_state import *
from .symplectic_form import *
from .occupation import *
from .operations import *
from .validation import *

__all__ = (
    _mode_table.__all__ +
    _gaussian_state.__all__ +
    _symplectic_form.__all__ +
    _occupation.__all__ +
    _operations.__all__ +
    _validation.__all__
    )
