"""
Error Handling Utilities.

This module provides decorators that give the numerical classes and the CLI a
uniform error policy without boilerplate code.

Functions and Decorators:
-------------------------
- `helper_quantifier_error`: Logs failures of strategy methods with the class
    and method name and traceback, then re-raises.
- `helper_cli_error`: Converts toolkit exceptions escaping a subcommand into a
    machine-readable JSON line on standard error and an exit status.
"""

import json
import sys
import traceback
from functools import wraps

import numpy as np

from ..exceptions import GaussianResourceError
from .logger_utils import logger_utility

__all__ = ['helper_quantifier_error', 'helper_cli_error']


def helper_quantifier_error(func):
    """
    A decorator to log errors raised inside quantifier and maximiser methods.

    Numerical failures are never swallowed: the error is logged with the
    owning class, the method and the traceback, and then propagated.

    Args:
        func (function): The method to wrap and monitor for exceptions.

    Returns:
        function: The wrapped method.

    Example:
        @helper_quantifier_error
        def quantify(self, state):
            ...
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        # Assumes the first argument is the class instance
        instance = args[0]
        logger = getattr(instance, 'logger', logger_utility.logger)
        owner_name = instance.__class__.__name__
        method_name = func.__name__

        try:
            return func(*args, **kwargs)
        except Exception as e:
            error_message = (
                f"Error in '{owner_name}', "
                f"method '{method_name}':\n"
                f"Exception: {e}\n"
                f"Traceback:\n{traceback.format_exc()}"
            )
            logger.error(error_message)
            raise
    return wrapper


def _emit(payload: dict) -> int:
    sys.stderr.write(json.dumps(payload) + '\n')
    sys.stderr.flush()
    return int(payload['exit_code'])


def helper_cli_error(func):
    """
    A decorator mapping exceptions of a CLI handler onto exit statuses.

    Exit status 1 marks invalid input, 2 a physicality or complete-positivity
    failure and 3 an internal tolerance failure. Each failure writes one JSON
    object as the last line of standard error, after any log records.

    Args:
        func (function): Handler returning an integer exit status.

    Returns:
        function: The wrapped handler.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        logger = logger_utility.logger
        try:
            return func(*args, **kwargs)
        except GaussianResourceError as e:
            logger.error(f"{func.__name__} failed: {e}")
            return _emit(e.to_dict())
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            logger.error(f"{func.__name__} could not read its input: {e}")
            return _emit({
                'error': 'StructuralError',
                'message': f"invalid input file: {e}",
                'exit_code': 1,
            })
        except np.linalg.LinAlgError as e:
            logger.error(f"{func.__name__} numerical failure: {e}")
            return _emit({
                'error': 'ToleranceError',
                'message': str(e),
                'exit_code': 3,
            })
    return wrapper
