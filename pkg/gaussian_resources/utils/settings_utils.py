"""
Settings Utilities Module

This module loads run settings (tolerance, logarithm base, logging, search
budget) from a dotenv file. The process environment is never consulted: values
come from the file passed on the command line or from built-in defaults.

Classes:
    - Settings: Immutable bundle of run settings.

Functions:
    - load_settings: Loads settings from a .env file.
"""

__all__ = ['DEFAULT_TOL', 'Settings', 'DEFAULT_SETTINGS', 'load_settings']

import os
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional

from dotenv import dotenv_values

from ..exceptions import InvalidParameterError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Settings:
    """Run settings shared by the CLI subcommands.

    Attributes:
        tol (float): Physicality and decomposition tolerance.
        log_base (str): 'e' for nats or '2' for bits.
        log_level (str): Name of the logging level.
        log_file (str, optional): File receiving a copy of the log.
        energy_scale (float): Factor converting reported energies to SI.
        search_budget (int): Default number of passive-search candidates.
        workers (int): Thread count for searches and sweeps.
        r_max (float): Maximal squeezing of random symplectic transforms.
    """
    tol: float = DEFAULT_TOL
    log_base: str = 'e'
    log_level: str = 'WARNING'
    log_file: Optional[str] = None
    energy_scale: float = 1.0
    search_budget: int = 500
    workers: int = 1
    r_max: float = 2.0

    def override(self, **values: Any) -> 'Settings':
        """Returns a copy where every non-None keyword replaces a field."""
        return replace(self, **{k: v for k, v in values.items() if v is not None})


DEFAULT_SETTINGS = Settings()

_KEYS: Dict[str, Any] = {
    'GAUSSIAN_TOL': ('tol', float),
    'GAUSSIAN_LOG_BASE': ('log_base', str),
    'GAUSSIAN_LOG_LEVEL': ('log_level', str),
    'GAUSSIAN_LOG_FILE': ('log_file', str),
    'GAUSSIAN_ENERGY_SCALE': ('energy_scale', float),
    'GAUSSIAN_SEARCH_BUDGET': ('search_budget', int),
    'GAUSSIAN_WORKERS': ('workers', int),
    'GAUSSIAN_R_MAX': ('r_max', float),
}


def load_settings(dotenv_path: Optional[str] = None) -> Settings:
    """Loads settings from a .env file.

    Args:
        dotenv_path (str, optional): The path to the .env file. Without it the
            defaults are returned.

    Returns:
        Settings: Defaults overridden by the keys present in the file.

    Raises:
        InvalidParameterError: If a value cannot be parsed.
    """
    if not dotenv_path:
        return DEFAULT_SETTINGS

    if not os.path.isfile(dotenv_path):
        raise FileNotFoundError(f"settings file not found: {dotenv_path}")
    values = dotenv_values(dotenv_path)
    parsed: Dict[str, Any] = {}
    for key, (field, cast) in _KEYS.items():
        raw = values.get(key)
        if raw is None or raw == '':
            continue
        try:
            parsed[field] = cast(raw)
        except ValueError as e:
            raise InvalidParameterError(
                f"setting {key}={raw!r} is not a valid {cast.__name__}",
                key=key) from e
    settings = DEFAULT_SETTINGS.override(**parsed)
    if settings.log_base not in ('e', '2'):
        raise InvalidParameterError(
            f"log base must be 'e' or '2', got {settings.log_base!r}")
    return settings


if __name__ == "__main__":
    dotenv_path = os.path.join(
        os.path.dirname(os.path.abspath(__file__)), '.env')
    print(load_settings(dotenv_path if os.path.exists(dotenv_path) else None))
