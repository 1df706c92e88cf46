"""
Command-Line Package

Batch front-end over state, channel and symplectic files.

Modules:
    - parser.py: Argument parser and flag-value parsing.
    - sweep.py: SweepConfig and the seeded Monte-Carlo hierarchy sweep.
    - commands.py: One handler per subcommand.
    - entry_point.py: Entry point mapping errors to exit statuses.
"""

from . import parser
from . import sweep
from . import commands
from . import entry_point

from .parser import *
from .sweep import *
from .commands import *
from .entry_point import *

__all__ = (
    parser.__all__ +
    sweep.__all__ +
    commands.__all__ +
    entry_point.__all__
    )
