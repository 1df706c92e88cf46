"""
Logger Utilities Module

This module provides utilities for logging the numerical work of the toolkit:
decomposition residuals, channel verdicts, search progress and CLI
subcommands. It includes a LoggerUtility class that facilitates the setup and
management of loggers and provides decorators for logging function calls and
errors.

Classes:
    - LoggerUtility: A utility class for setting up and managing logging operations.

Methods:
    - clear_logger: Clears the package logger and its handlers.
    - setup_logger: Sets up logger with a stderr console handler.
    - log_function: Logs the entry and exit of a function call.
    - log_debug: Logs the entry and exit of a function call at the DEBUG level.
    - log_error: Logs exceptions escaping a function call at the ERROR level.
    - update_file_handler: Attaches a file handler for the configured log file.

Attributes:
    - logger_utility: Package-wide LoggerUtility instance.

Standard output is reserved for JSON and CSV results, so the console handler
writes to standard error.
"""

__all__ = ['LoggerUtility', 'logger_utility']

import os
import sys
import logging
from functools import wraps
from typing import Optional, Union

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class LoggerUtility(object):
    """
    A utility class for setting up and managing logging operations.

    Attributes:
        name (str): The name of the logger.
        level (int): The logging level.
        log_file (str): Optional path of a log file.

    Methods:
        clear_logger(): Clears the handlers of the logger with the specified name.
        setup_logger(): Sets up a logger with a console handler.
        __call__(func): Allows the class instance to be used as a decorator.
        log_function(func): Logs the entry and exit of a function call.
        log_debug(func): Logs the entry and exit of a function call at the DEBUG level.
        log_error(func): Logs errors raised by a function call.
    """

    def __init__(
            self,
            name: str,
            level: int = logging.WARNING,
            log_file: Optional[str] = None
            ) -> None:
        """
        Initializes the LoggerUtility with specified configurations.

        Args:
            name (str): Name of the logger.
            level (int): Logging level.
            log_file (str, optional): File receiving a copy of the log.
        """
        self.name = name
        self._level = level
        self._log_file = log_file
        self.file_handler: Optional[logging.Handler] = None
        self.logger, self.console_handler = self.setup_logger()
        if log_file:
            self.update_file_handler()

    def __str__(self):
        return (f"LoggerUtility(name={self.name}, level={self._level}, "
                f"log_file={self._log_file})")

    def __repr__(self):
        return self.__str__()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.clear_logger()

    def __call__(self, func):
        """Allows the class instance to be used as a decorator for logging function calls."""
        return self.log_function(func)

    def clear_logger(self):
        """
        Clears the handlers of the logger with the specified name.
        """
        logger = logging.getLogger(self.name)
        for handler in logger.handlers[:]:
            handler.close()
            logger.removeHandler(handler)
        self.file_handler = None

    def setup_logger(self):
        """
        Sets up a logger with a console handler on standard error.

        Returns:
            tuple: Configured logger, console handler.
        """
        self.clear_logger()

        logger = logging.getLogger(self.name)
        logger.setLevel(self._level)
        logger.propagate = False

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(console_handler)

        return logger, console_handler

    @property
    def log_file(self) -> Optional[str]:
        """Gets the current log file path."""
        return self._log_file

    @log_file.setter
    def log_file(self, value: Optional[str]):
        """Sets the log file path and updates the file handler."""
        self._log_file = value
        self.update_file_handler()

    @property
    def level(self) -> int:
        """Gets the current logging level."""
        return self._level

    @level.setter
    def level(self, value: Union[int, str]):
        """Sets the logging level (name or number) and updates the logger."""
        if isinstance(value, str):
            value = logging.getLevelName(value.upper())
            if not isinstance(value, int):
                value = logging.WARNING
        self._level = value
        self.logger.setLevel(self._level)

    @level.deleter
    def level(self):
        """Resets the logging level to default (WARNING) and updates the logger."""
        self._level = logging.WARNING
        self.logger.setLevel(self._level)

    def update_file_handler(self):
        """Replaces the file handler with one writing to the current log file."""
        if self.file_handler is not None:
            self.logger.removeHandler(self.file_handler)
            self.file_handler.close()
            self.file_handler = None
        if self._log_file:
            log_file_path = os.path.expanduser(self._log_file)
            self.file_handler = logging.FileHandler(log_file_path, mode='a')
            self.file_handler.setFormatter(logging.Formatter(_FORMAT))
            self.logger.addHandler(self.file_handler)

    # decorator
    def log_function(self, func):
        """Decorator to log the entry and exit of a function call."""
        @wraps(func)
        def wrapper(*args, **kwargs):
            self.logger.info(f"Calling {func.__name__}")
            result = func(*args, **kwargs)
            self.logger.info(f"{func.__name__} completed")
            return result
        return wrapper

    # decorator
    def log_debug(self, func):
        """Decorator to log the entry and exit of a function call at the DEBUG level."""
        @wraps(func)
        def wrapper(*args, **kwargs):
            self.logger.debug(f"Calling {func.__name__}")
            result = func(*args, **kwargs)
            self.logger.debug(f"{func.__name__} completed")
            return result
        return wrapper

    # decorator
    def log_error(self, func):
        """Decorator to log an exception escaping a function call at the ERROR level."""
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                self.logger.error(f"Error in {func.__name__}: {e}")
                raise
        return wrapper


# Create an instance of LoggerUtility
logger_utility = LoggerUtility('gaussian_resources')

if __name__ == '__main__':
    logger_utility.level = 'DEBUG'

    @logger_utility.log_debug
    def vacuum_occupation(omega: float = 1.0) -> float:
        return 0.0 * omega

    vacuum_occupation()
