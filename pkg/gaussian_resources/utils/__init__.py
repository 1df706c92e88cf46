"""
Utilities Package

This subpackage provides the common utilities of the toolkit: logging, error
handling, run settings and the JSON/CSV file formats.

Modules:
    - logger_utils.py: Logging functions and decorators using the logging module.
    - error_utils.py: Decorators logging quantifier errors and mapping CLI errors to exit codes.
    - settings_utils.py: Loading function for settings in .env files.
    - csv_utils.py: CSV writer with a versioned header comment.
    - json_utils.py: Utility class reading and writing state, channel and
      symplectic files. It depends on the domain packages, which import this
      package, so it is not re-exported here.
"""

from . import logger_utils
from . import error_utils
from . import settings_utils
from . import csv_utils

from .logger_utils import *
from .error_utils import *
from .settings_utils import *
from .csv_utils import *

__all__ = (
    logger_utils.__all__ +
    error_utils.__all__ +
    settings_utils.__all__ +
    csv_utils.__all__
    )
