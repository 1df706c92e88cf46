"""
Resource Quantifiers Package

Closed-form entropic quantifiers of Gaussian states and the report that
checks the resource hierarchy P ≥ C ≥ D ≥ E.

Modules:
    - entropy.py: Entropy kernels, von Neumann and relative entropy.
    - coherence.py: Coherence, maximal coherence and non-uniformity.
    - correlations.py: Discord, mutual information and pure-state entanglement.
    - base_quantifier.py: BaseQuantifier strategy interface.
    - strategies: One quantifier strategy per measure.
    - resource_orchestrator.py: ResourceQuantifierOrchestrator and ResourceReport.
"""

from . import entropy
from . import coherence
from . import correlations
from . import base_quantifier
from . import strategies
from . import resource_orchestrator

from .entropy import *
from .coherence import *
from .correlations import *
from .base_quantifier import *
from .strategies import *
from .resource_orchestrator import *

__all__ = (
    entropy.__all__ +
    coherence.__all__ +
    correlations.__all__ +
    base_quantifier.__all__ +
    strategies.__all__ +
    resource_orchestrator.__all__
    )
