"""
Command-Line Entry Point

Usage:
    gaussian-resources report state.json --bipartition 0
    gaussian-resources sweep --samples 1000 --seed 7 --modes 2x3 --out sweep.csv

Exit status: 0 on success, 1 for invalid input, 2 for a physicality or
complete-positivity failure, 3 when a numerical tolerance was not met.

Functions:
    - resolve_settings: Flags over the settings file over the defaults.
    - main: Parses the arguments and runs the subcommand.
"""

import argparse
from typing import Optional, Sequence

from ..utils.error_utils import helper_cli_error
from ..utils.logger_utils import logger_utility
from ..utils.settings_utils import Settings, load_settings
from .commands import COMMANDS
from .parser import build_parser

__all__ = ['resolve_settings', 'main']


def resolve_settings(args: argparse.Namespace) -> Settings:
    return load_settings(args.config).override(
        tol=args.tol,
        log_base=args.log_base,
        log_level=args.log_level,
        workers=args.workers,
        search_budget=getattr(args, 'budget', None),
        r_max=getattr(args, 'r_max', None),
    )


@helper_cli_error
def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs one subcommand.

    Args:
        argv (Sequence[str], optional): Arguments without the program name;
            defaults to ``sys.argv[1:]``.

    Returns:
        int: The exit status.
    """
    args = build_parser().parse_args(argv)
    settings = resolve_settings(args)
    logger_utility.level = settings.log_level
    logger_utility.log_file = settings.log_file

    logger = logger_utility.logger
    logger.info(f"Running {args.command}...")
    status = COMMANDS[args.command](args, settings)
    logger.info(f"{args.command} finished with status {status}")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
