"""
Argument Parser Module

Builds the ``gaussian-resources`` argument parser and parses the compact
flag values (mode shapes, index and frequency lists).

Classes:
    - CLIArgumentParser: ArgumentParser raising StructuralError instead of exiting.

Functions:
    - build_parser: The parser with every subcommand.
    - parse_modes: '<M_f>x<M_s>' → (M_f, M_s).
    - parse_indices: '0,2' → (0, 2).
    - parse_floats: '1,2.5' → (1.0, 2.5).
    - mode_table_from_args: ModeTable from --modes and --omegas.
"""

import argparse
from typing import Optional, Tuple

from ..core.mode_table import ModeTable
from ..exceptions import InvalidParameterError, StructuralError
from ..maximize.maximizers import MAXIMIZERS
from ..maximize.objectives import OBJECTIVES

__all__ = [
    'SUBCOMMANDS',
    'CLIArgumentParser',
    'build_parser',
    'parse_modes',
    'parse_indices',
    'parse_floats',
    'mode_table_from_args',
]

SUBCOMMANDS = ('validate', 'report', 'williamson', 'bloch-messiah', 'maximize',
               'channel-apply', 'sweep', 'random-state')


class CLIArgumentParser(argparse.ArgumentParser):
    """Usage errors surface as StructuralError so they exit with status 1."""

    def error(self, message: str):
        raise StructuralError(f"{self.prog}: {message}")


def parse_modes(text: str) -> Tuple[int, int]:
    try:
        num_frequencies, spatial_modes = (int(x) for x in text.lower().split('x'))
    except ValueError:
        raise InvalidParameterError(f"--modes expects <M_f>x<M_s>, got {text!r}")
    if num_frequencies < 1 or spatial_modes < 1:
        raise InvalidParameterError(f"--modes needs positive counts, got {text!r}")
    return num_frequencies, spatial_modes


def parse_indices(text: Optional[str]) -> Optional[Tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise InvalidParameterError(f"expected comma-separated mode indices, got {text!r}")


def parse_floats(text: Optional[str]) -> Optional[Tuple[float, ...]]:
    if text is None:
        return None
    try:
        return tuple(float(x) for x in text.split(',') if x.strip())
    except ValueError:
        raise InvalidParameterError(f"expected comma-separated numbers, got {text!r}")


def mode_table_from_args(modes: str, omegas: Optional[str]) -> ModeTable:
    """Frequencies default to 1, 2, …, M_f."""
    num_frequencies, spatial_modes = parse_modes(modes)
    values = parse_floats(omegas)
    if values is None:
        values = tuple(float(k + 1) for k in range(num_frequencies))
    if len(values) != num_frequencies:
        raise StructuralError(
            f"--omegas lists {len(values)} frequencies but --modes asks for {num_frequencies}")
    return ModeTable.regular(values, spatial_modes)


def _common_parent() -> argparse.ArgumentParser:
    # None defaults let the settings file fill in unset flags.
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--config', help='dotenv file with GAUSSIAN_* settings')
    parent.add_argument('--tol', type=float, help='physicality and residual tolerance')
    parent.add_argument('--log-base', choices=('e', '2'), help='logarithm base of reported entropies')
    parent.add_argument('--log-level', help='logging level name')
    parent.add_argument('--workers', type=int, help='worker threads')
    parent.add_argument('--out', help='output file; stdout when omitted')
    return parent


def _add_random_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--modes', default='1x2', help='<M_f>x<M_s>')
    parser.add_argument('--omegas', help='comma-separated frequencies')
    parser.add_argument('--r-max', type=float, help='largest squeezing parameter')
    parser.add_argument('--nbar-max', type=float, default=3.0, help='largest thermal occupation')
    parser.add_argument('--scale', type=float, default=1.0, help='displacement scale')
    parser.add_argument('--pure', action='store_true', help='sample pure states')


def build_parser() -> CLIArgumentParser:
    parent = _common_parent()
    parser = CLIArgumentParser(
        prog='gaussian-resources',
        description='Resource quantifiers and passive maximizers for multimode Gaussian states.')
    sub = parser.add_subparsers(dest='command', required=True,
                                parser_class=CLIArgumentParser)

    p = sub.add_parser('validate', parents=[parent], help='check physicality of a state file')
    p.add_argument('state')

    p = sub.add_parser('report', parents=[parent], help='all quantifiers and the hierarchy verdict')
    p.add_argument('state')
    p.add_argument('--bipartition', help='comma-separated modes on one side of the cut')

    p = sub.add_parser('williamson', parents=[parent], help='Williamson normal form')
    p.add_argument('state')

    p = sub.add_parser('bloch-messiah', parents=[parent], help='Bloch-Messiah decomposition')
    p.add_argument('--symplectic', required=True, help='symplectic matrix file')

    p = sub.add_parser('maximize', parents=[parent], help='passive unitary maximizing an objective')
    p.add_argument('state')
    p.add_argument('--method', choices=sorted(MAXIMIZERS), default='search')
    p.add_argument('--objective', choices=sorted(OBJECTIVES), default='coherence')
    p.add_argument('--bipartition', help='comma-separated modes on one side of the cut')
    p.add_argument('--budget', type=int, help='number of search candidates')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--refine', action='store_true', help='Givens coordinate ascent')

    p = sub.add_parser('channel-apply', parents=[parent], help='apply a Gaussian channel')
    p.add_argument('state')
    p.add_argument('--channel', required=True, help='channel file')

    p = sub.add_parser('sweep', parents=[parent], help='seeded Monte-Carlo hierarchy sweep')
    p.add_argument('--samples', type=int, default=1000)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--bipartition', help='cut for pure samples; defaults to the first mode')
    _add_random_flags(p)

    p = sub.add_parser('random-state', parents=[parent], help='sample a random state file')
    p.add_argument('--seed', type=int, required=True)
    _add_random_flags(p)

    return parser
