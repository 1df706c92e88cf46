"""
Base Quantifier Module

This module provides the base class for all quantifier strategies.

Classes:
    - BaseQuantifier: A base class for quantifier strategies.
"""

import logging

from ..core.gaussian_state import GaussianState
from ..utils.logger_utils import logger_utility

__all__ = ['BaseQuantifier']


class BaseQuantifier:
    """
    BaseQuantifier

    A base class for quantifier strategies.

    Attributes:
        logger (logging.Logger): The logger for logging messages and errors.

    Methods:
        __init__(logger): Initialises the quantifier with an optional logger.
        quantify(state): The quantify method to be overridden by subclasses.
    """
    def __init__(self, logger: logging.Logger = None):
        """
        Initialises the BaseQuantifier with an optional logger.

        Args:
            logger (logging.Logger, optional): The logger for logging messages
            and errors. Defaults to the package logger.
        """
        self.logger = logger if logger else logger_utility.logger

    def quantify(self, state: GaussianState):
        """
        The quantify method to be overridden by subclasses.

        Args:
            state (GaussianState): The state to measure.

        Returns:
            The value of the quantifier, in nats.
        """
        raise NotImplementedError("Subclasses should implement this method")
