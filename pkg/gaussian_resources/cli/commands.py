"""
Commands Module

One handler per subcommand. Each receives the parsed arguments and the
effective settings, writes its result to ``--out`` or stdout and returns the
exit status.

Functions:
    - validate_command, report_command, williamson_command,
      bloch_messiah_command, maximize_command, channel_apply_command,
      sweep_command, random_state_command.

Attributes:
    - COMMANDS: Subcommand name → handler.
"""

import argparse
from typing import Callable, Dict

from ..channels.gaussian_channel import apply_channel
from ..core.gaussian_state import GaussianState
from ..core.validation import require_valid, validate_state
from ..exceptions import PhysicalityError
from ..maximize.maximizers import get_maximizer
from ..quantify.entropy import to_log_base
from ..quantify.resource_orchestrator import hierarchy_report
from ..states.random_states import random_pure_state, random_state
from ..symplectic.bloch_messiah import bloch_messiah
from ..symplectic.symplectic_matrix import SymplecticMatrix
from ..symplectic.williamson import williamson
from ..utils.json_utils import JSONStateUtility
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import Settings
from .parser import mode_table_from_args, parse_indices
from .sweep import SweepConfig, run_sweep

__all__ = ['COMMANDS']

Handler = Callable[[argparse.Namespace, Settings], int]


def _load_state(path: str) -> GaussianState:
    return JSONStateUtility.state_from_dict(JSONStateUtility.read_json(path))


def validate_command(args: argparse.Namespace, settings: Settings) -> int:
    state = _load_state(args.state)
    verdict = validate_state(state, settings.tol)
    JSONStateUtility.write_json(verdict.to_dict(), args.out)
    if not verdict.ok:
        raise PhysicalityError(
            f"state violates {', '.join(verdict.names)}",
            violations=[v.to_dict() for v in verdict.violations])
    return 0


def report_command(args: argparse.Namespace, settings: Settings) -> int:
    state = _load_state(args.state)
    report = hierarchy_report(
        state,
        bipartition=parse_indices(args.bipartition),
        log_base=settings.log_base,
        energy_scale=settings.energy_scale,
        state_tol=settings.tol)
    JSONStateUtility.write_json(report.to_dict(), args.out)
    return 0


def williamson_command(args: argparse.Namespace, settings: Settings) -> int:
    state = require_valid(_load_state(args.state), settings.tol)
    result = williamson(state.covariance, settings.tol, state.modes)
    JSONStateUtility.write_json(result.to_dict(), args.out)
    return 0


def bloch_messiah_command(args: argparse.Namespace, settings: Settings) -> int:
    raw = JSONStateUtility.symplectic_from_dict(JSONStateUtility.read_json(args.symplectic))
    S = SymplecticMatrix.checked(raw.matrix, raw.modes, settings.tol)
    result = bloch_messiah(S, settings.tol, S.modes)
    JSONStateUtility.write_json(result.to_dict(), args.out)
    return 0


def maximize_command(args: argparse.Namespace, settings: Settings) -> int:
    state = require_valid(_load_state(args.state), settings.tol)
    options = {
        'objective': args.objective,
        'bipartition': parse_indices(args.bipartition),
    }
    if args.method == 'search':
        options.update(budget=settings.search_budget, seed=args.seed,
                       refine=args.refine, workers=settings.workers)
    elif args.method in ('beam-splitter', 'qft'):
        options['tol'] = settings.tol
    outcome = get_maximizer(args.method, **options).maximize(state)
    data = outcome.to_dict()
    for key in ('initial', 'achieved', 'target', 'gap'):
        data[key] = to_log_base(data[key], settings.log_base)
    data['log_base'] = settings.log_base
    JSONStateUtility.write_json(data, args.out)
    return 0


def channel_apply_command(args: argparse.Namespace, settings: Settings) -> int:
    state = require_valid(_load_state(args.state), settings.tol)
    channel = JSONStateUtility.channel_from_dict(JSONStateUtility.read_json(args.channel))
    output = apply_channel(channel, state, settings.tol)
    JSONStateUtility.write_json(JSONStateUtility.state_to_dict(output), args.out)
    return 0


def sweep_command(args: argparse.Namespace, settings: Settings) -> int:
    config = SweepConfig(
        modes=mode_table_from_args(args.modes, args.omegas),
        samples=args.samples,
        seed=args.seed,
        r_max=settings.r_max,
        nbar_max=args.nbar_max,
        displacement_scale=args.scale,
        pure=args.pure,
        bipartition=parse_indices(args.bipartition),
        state_tol=settings.tol,
        log_base=settings.log_base)
    run_sweep(config, settings.workers, args.out)
    return 0


def random_state_command(args: argparse.Namespace, settings: Settings) -> int:
    modes = mode_table_from_args(args.modes, args.omegas)
    if args.pure:
        state = random_pure_state(modes, args.seed, settings.r_max, args.scale)
    else:
        state = random_state(modes, args.seed, settings.r_max, args.scale, args.nbar_max)
    metadata = {
        'seed': args.seed,
        'r_max': settings.r_max,
        'nbar_max': 0.0 if args.pure else args.nbar_max,
        'displacement_scale': args.scale,
    }
    logger_utility.logger.debug(f"random state with {metadata}")
    JSONStateUtility.write_json(JSONStateUtility.state_to_dict(state, metadata), args.out)
    return 0


COMMANDS: Dict[str, Handler] = {
    'validate': validate_command,
    'report': report_command,
    'williamson': williamson_command,
    'bloch-messiah': bloch_messiah_command,
    'maximize': maximize_command,
    'channel-apply': channel_apply_command,
    'sweep': sweep_command,
    'random-state': random_state_command,
}
