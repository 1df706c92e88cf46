"""
Shared fixtures: reference states whose resource values are known in
closed form, and a seeded generator.
"""
import numpy as np
import pytest

from gaussian_resources.core.mode_table import ModeTable
from gaussian_resources.states.pure import coherent_state, two_mode_squeezed_vacuum
from gaussian_resources.states.thermal import ThermalSpec, thermal_state
from gaussian_resources.utils.json_utils import JSONStateUtility

LN2 = np.log(2.0)
TMSV_R = float(np.arcsinh(1.0))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def pair_table():
    return ModeTable.single_frequency(2)


@pytest.fixture
def two_frequency_table():
    return ModeTable.regular((1.0, 2.0), 2)


@pytest.fixture
def tmsv(pair_table):
    """Two-mode squeezed vacuum with sinh² r = 1."""
    return two_mode_squeezed_vacuum(TMSV_R, (0, 1), pair_table)


@pytest.fixture
def coherent_one():
    """Single-mode coherent state with |α|² = 1."""
    return coherent_state([1.0], ModeTable.single_frequency(1))


@pytest.fixture
def thermal_one():
    """Single-mode thermal state with n̄ = 1."""
    return thermal_state(ThermalSpec(ModeTable.single_frequency(1), (1.0,)))


@pytest.fixture
def coherent_and_vacuum(pair_table):
    """Coherent |α|² = 2 on mode 0, vacuum on mode 1."""
    return coherent_state([np.sqrt(2.0), 0.0], pair_table)


@pytest.fixture
def write_state(tmp_path):
    """Writes a state file and returns its path."""
    def _write(state, name='state.json'):
        path = tmp_path / name
        JSONStateUtility.write_json(JSONStateUtility.state_to_dict(state), str(path))
        return str(path)
    return _write
