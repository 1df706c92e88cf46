"""
Resource Quantifier Orchestrator Module

This module provides a class orchestrating the quantifier strategies and the
report they produce together.

Classes:
    - ResourceReport: All quantifiers of one state plus the hierarchy verdict.
    - ResourceQuantifierOrchestrator: Runs every quantifier on a state.

Functions:
    - hierarchy_check: Evaluates P ≥ C ≥ D (≥ E) within a tolerance.
    - hierarchy_report: Builds the ResourceReport of a state.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, Optional, Sequence, Tuple

from ..core.gaussian_state import GaussianState
from ..core.occupation import mean_occupation
from ..core.validation import require_valid
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import DEFAULT_TOL
from .entropy import to_log_base
from .strategies import (
    CoherenceQuantifier,
    DiscordQuantifier,
    EntanglementQuantifier,
    EntropyQuantifier,
    MaxCoherenceQuantifier,
    NonUniformityQuantifier,
    )

__all__ = [
    'HIERARCHY_TOL',
    'ResourceReport',
    'ResourceQuantifierOrchestrator',
    'hierarchy_check',
    'hierarchy_report',
]

HIERARCHY_TOL = 1e-8

EXACT = 'exact'
BOUND_ONLY = 'bound-only'


@dataclass(frozen=True)
class ResourceReport:
    """
    Attributes:
        entropy (float): S(ρ).
        coherence (float): C_rel.
        coherence_max (float): C_max.
        nonuniformity (float): P_rel.
        discord (float): D_rel.
        entanglement (float, optional): E_rel, set only for pure states with
            a declared bipartition.
        entanglement_status (str): 'exact' or 'bound-only'.
        entanglement_bound (float): Upper bound on E_rel (the discord).
        bipartition (Tuple[int, ...], optional): The declared cut.
        hierarchy_ok (bool): P ≥ C ≥ D, and D ≥ E when E is set.
        nonuniformity_gap (float): |P_rel − C_max|.
        log_base (str): Base of every entropic value above.
        energy (float): Σ_ω ω N_ω, in the configured energy unit.
    """
    entropy: float
    coherence: float
    coherence_max: float
    nonuniformity: float
    discord: float
    entanglement: Optional[float]
    entanglement_status: str
    entanglement_bound: float
    bipartition: Optional[Tuple[int, ...]]
    hierarchy_ok: bool
    nonuniformity_gap: float
    log_base: str
    energy: float

    def to_dict(self) -> dict:
        data = asdict(self)
        if self.bipartition is not None:
            data['bipartition'] = list(self.bipartition)
        return data


def hierarchy_check(P: float, C: float, D: float, E: Optional[float] = None,
                    tol: float = HIERARCHY_TOL) -> bool:
    """
    P ≥ C ≥ D, and D ≥ E when E is given, each within ``tol·(1 + larger)``.

    Args:
        P, C, D (float): Non-uniformity, coherence and discord.
        E (float, optional): Entanglement.
        tol (float): Tolerance per inequality.

    Returns:
        bool: Whether the chain holds.
    """
    pairs = [(P, C), (C, D)]
    if E is not None:
        pairs.append((D, E))
    return all(hi >= lo - tol * (1.0 + abs(hi)) for hi, lo in pairs)


class ResourceQuantifierOrchestrator:
    """
    A class to orchestrate all quantifiers on a Gaussian state.

    Attributes:
        logger (logging.Logger): The logger for logging messages and errors.
        quantifiers (list): A list of quantifier instances.

    Methods:
        __init__(logger, bipartition, reference_delta): Initialises the
            orchestrator with its sub-quantifiers.
        execute(state): Runs every quantifier on the state.
    """
    def __init__(
            self,
            logger: logging.Logger = None,
            bipartition: Optional[Sequence[int]] = None,
            reference_delta: Optional[Sequence[float]] = None):
        """
        Args:
            logger (logging.Logger, optional): The logger for logging messages
                and errors.
            bipartition (Sequence[int], optional): Cut for the entanglement.
            reference_delta (Sequence[float], optional): Fixed δ for the
                non-uniformity reference instead of the state's own.
        """
        self.logger = logger if logger else logger_utility.logger
        self.quantifiers = [
            EntropyQuantifier(self.logger),
            CoherenceQuantifier(self.logger),
            MaxCoherenceQuantifier(self.logger),
            NonUniformityQuantifier(self.logger, reference_delta),
            DiscordQuantifier(self.logger),
            EntanglementQuantifier(self.logger, bipartition),
        ]

    def execute(self, state: GaussianState) -> Dict[str, Optional[float]]:
        """
        Run every quantifier on the state.

        Returns:
            dict: Results keyed by quantifier class name, in nats.
        """
        results = {}
        self.logger.debug(f'Quantifying a {state.num_modes}-mode state...')
        for q in self.quantifiers:
            results[q.__class__.__name__] = q.quantify(state)
        return results


def hierarchy_report(
        s: GaussianState,
        bipartition: Optional[Sequence[int]] = None,
        log_base: str = 'e',
        tol: float = HIERARCHY_TOL,
        energy_scale: float = 1.0,
        state_tol: float = DEFAULT_TOL) -> ResourceReport:
    """
    Evaluate every quantifier and the resource hierarchy of a state.

    The inequalities are checked in nats; the reported values are then
    converted to ``log_base``.

    Args:
        s (GaussianState): The state.
        bipartition (Sequence[int], optional): Cut for the entanglement.
        log_base (str): 'e' or '2'.
        tol (float): Tolerance of each hierarchy inequality.
        energy_scale (float): Unit conversion applied to the energy only.
        state_tol (float): Physicality tolerance.

    Returns:
        ResourceReport: The report.

    Raises:
        PhysicalityError: If the state is not physical.

    Example:
        TMSV with sinh² r = 1 and bipartition (0,) →
        P = C = C_max = D = 4 log 2, E = 2 log 2, hierarchy_ok.
    """
    require_valid(s, state_tol)
    to_log_base(0.0, log_base)  # rejects an unknown base before any work
    results = ResourceQuantifierOrchestrator(bipartition=bipartition).execute(s)

    S = results['EntropyQuantifier']
    C = results['CoherenceQuantifier']
    C_max = results['MaxCoherenceQuantifier']
    P = results['NonUniformityQuantifier']
    D = results['DiscordQuantifier']
    E = results['EntanglementQuantifier']

    ok = hierarchy_check(P, C, D, E, tol)
    if not ok:
        logger_utility.logger.warning(
            f"hierarchy violated: P={P:.12g} C={C:.12g} D={D:.12g} E={E}")

    def convert(value):
        return None if value is None else to_log_base(value, log_base)

    return ResourceReport(
        entropy=convert(S),
        coherence=convert(C),
        coherence_max=convert(C_max),
        nonuniformity=convert(P),
        discord=convert(D),
        entanglement=convert(E),
        entanglement_status=EXACT if E is not None else BOUND_ONLY,
        entanglement_bound=convert(D),
        bipartition=None if bipartition is None else tuple(int(m) for m in bipartition),
        hierarchy_ok=ok,
        nonuniformity_gap=convert(abs(P - C_max)),
        log_base=log_base,
        energy=mean_occupation(s).scaled_energy(energy_scale),
    )
