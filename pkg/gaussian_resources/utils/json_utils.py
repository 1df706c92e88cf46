"""
JSON State Utility Module

This module provides a utility class reading and writing the JSON files the
command line exchanges: states, channels and symplectic matrices.

Classes:
    - JSONStateUtility: Static methods converting between files, plain dicts
      and the package's value types.

File layout shared by every kind:
    schema_version, omegas, spatial_modes (or sector_sizes for tables with
    unequal sectors) and ordering ('qpqp', or 'qqpp' on input only).

Usage:
    JSONStateUtility.write_json(JSONStateUtility.state_to_dict(state), 'state.json')
    state = JSONStateUtility.state_from_dict(JSONStateUtility.read_json('state.json'))
"""

import json
import logging
import os
import sys
from typing import Any, Dict, Optional

import numpy as np

from ..channels.gaussian_channel import GaussianChannel
from ..core.gaussian_state import GaussianState
from ..core.mode_table import ModeTable
from ..core.operations import qqpp_to_qpqp
from ..exceptions import StructuralError
from ..symplectic.symplectic_matrix import SymplecticMatrix
from .logger_utils import logger_utility

__all__ = ['SCHEMA_VERSION', 'JSONStateUtility']

SCHEMA_VERSION = 1
ORDERINGS = ('qpqp', 'qqpp')


def _array(value: Any, name: str, ndim: int) -> np.ndarray:
    try:
        array = np.array(value, dtype=float)
    except (TypeError, ValueError) as e:
        raise StructuralError(f"field {name!r} is not a numeric array: {e}") from e
    if array.ndim != ndim:
        raise StructuralError(f"field {name!r} must have {ndim} dimension(s), got {array.ndim}")
    return array


class JSONStateUtility:
    """
    Utility class for the JSON file formats.

    Methods:
        modes_to_dict(modes): Header fields of a mode table.
        modes_from_dict(data): Mode table from the header fields.
        state_to_dict(state, metadata): StateFile content.
        state_from_dict(data): GaussianState, reordered to qpqp if needed.
        channel_to_dict(channel): ChannelFile content.
        channel_from_dict(data): GaussianChannel.
        symplectic_from_dict(data): SymplecticMatrix, unchecked.
        read_json(file_path): Parsed JSON content.
        write_json(data, file_path, logger): Writes to a file or stdout.
    """

    @staticmethod
    def modes_to_dict(modes: ModeTable) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'schema_version': SCHEMA_VERSION,
            'omegas': list(modes.omegas),
        }
        if modes.is_regular:
            data['spatial_modes'] = modes.spatial_modes
        else:
            data['sector_sizes'] = list(modes.sector_sizes)
        data['ordering'] = 'qpqp'
        return data

    @staticmethod
    def modes_from_dict(data: Dict[str, Any]) -> ModeTable:
        """
        Raises:
            StructuralError: On an unknown schema version or a missing or
                non-numeric header field.
        """
        version = data.get('schema_version', SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise StructuralError(f"unsupported schema_version {version!r}")
        try:
            omegas = tuple(float(w) for w in data['omegas'])
            if 'sector_sizes' in data:
                sizes = tuple(int(n) for n in data['sector_sizes'])
            else:
                spatial_modes = int(data['spatial_modes'])
        except (KeyError, TypeError, ValueError) as e:
            raise StructuralError(f"malformed mode table header: {e!r}") from e
        if 'sector_sizes' in data:
            return ModeTable(omegas, sizes)
        return ModeTable.regular(omegas, spatial_modes)

    @staticmethod
    def _ordering(data: Dict[str, Any]) -> str:
        ordering = data.get('ordering', 'qpqp')
        if ordering not in ORDERINGS:
            raise StructuralError(f"ordering must be one of {ORDERINGS}, got {ordering!r}")
        return ordering

    @staticmethod
    def state_to_dict(state: GaussianState,
                      metadata: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        data = JSONStateUtility.modes_to_dict(state.modes)
        data['displacement'] = state.displacement.tolist()
        data['covariance'] = state.covariance.tolist()
        if metadata:
            data['metadata'] = metadata
        return data

    @staticmethod
    def state_from_dict(data: Dict[str, Any]) -> GaussianState:
        """
        Parses a StateFile without checking physicality.

        Raises:
            StructuralError: For malformed fields or mismatched dimensions.
        """
        modes = JSONStateUtility.modes_from_dict(data)
        d = _array(data['displacement'], 'displacement', 1)
        V = _array(data['covariance'], 'covariance', 2)
        if JSONStateUtility._ordering(data) == 'qqpp':
            if d.size != V.shape[0] or V.shape[0] != V.shape[1]:
                raise StructuralError(
                    f"displacement of length {d.size} does not match covariance {V.shape}")
            d = qqpp_to_qpqp(vector=d)
            V = qqpp_to_qpqp(matrix=V)
        return GaussianState(modes, d, V)

    @staticmethod
    def channel_to_dict(channel: GaussianChannel) -> Dict[str, Any]:
        data = JSONStateUtility.modes_to_dict(channel.modes)
        data['T'] = channel.transfer.tolist()
        data['N'] = channel.noise.tolist()
        data['v'] = channel.shift.tolist()
        return data

    @staticmethod
    def channel_from_dict(data: Dict[str, Any]) -> GaussianChannel:
        modes = JSONStateUtility.modes_from_dict(data)
        T = _array(data['T'], 'T', 2)
        N = _array(data['N'], 'N', 2)
        v = _array(data.get('v', np.zeros(2 * modes.num_modes)), 'v', 1)
        if JSONStateUtility._ordering(data) == 'qqpp':
            T, N, v = (qqpp_to_qpqp(matrix=T), qqpp_to_qpqp(matrix=N),
                       qqpp_to_qpqp(vector=v))
        return GaussianChannel(modes, T, N, v)

    @staticmethod
    def symplectic_from_dict(data: Dict[str, Any]) -> SymplecticMatrix:
        modes = JSONStateUtility.modes_from_dict(data)
        S = _array(data['S'], 'S', 2)
        if JSONStateUtility._ordering(data) == 'qqpp':
            S = qqpp_to_qpqp(matrix=S)
        return SymplecticMatrix(S, modes)

    @staticmethod
    @logger_utility.log_error
    def read_json(file_path: str) -> Dict[str, Any]:
        """
        Raises:
            OSError: If the file cannot be read.
            json.JSONDecodeError: If it is not JSON.
            StructuralError: If the top level is not an object.
        """
        with open(os.path.expanduser(file_path), 'r', encoding='utf-8') as json_file:
            data = json.load(json_file)
        if not isinstance(data, dict):
            raise StructuralError(f"{file_path} does not contain a JSON object")
        return data

    @staticmethod
    def dumps(data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2, allow_nan=True)

    @staticmethod
    def write_json(data: Dict[str, Any], file_path: Optional[str] = None,
                   logger: Optional[logging.Logger] = None) -> None:
        """
        Writes the dictionary to ``file_path``, or to stdout without one.

        Floats are written with ``repr`` precision so reloading is exact.
        """
        logger = logger or logger_utility.logger
        text = JSONStateUtility.dumps(data) + '\n'
        if file_path is None:
            sys.stdout.write(text)
            return
        file_path = os.path.expanduser(file_path)
        with open(file_path, 'w', encoding='utf-8') as json_file:
            json_file.write(text)
        logger.info(f"Wrote {file_path}")


# Usage example
if __name__ == "__main__":
    from ..states.thermal import ThermalSpec, thermal_state

    example = thermal_state(ThermalSpec(ModeTable.single_frequency(2), (1.0, 0.5)))
    JSONStateUtility.write_json(JSONStateUtility.state_to_dict(example))
