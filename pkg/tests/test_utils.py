import json
import logging

import numpy as np
import pytest

from gaussian_resources.channels.gaussian_channel import loss_channel
from gaussian_resources.core.mode_table import ModeTable
from gaussian_resources.exceptions import (
    InvalidParameterError, PhysicalityError, StructuralError, ToleranceError)
from gaussian_resources.states.random_states import random_state
from gaussian_resources.utils.csv_utils import format_value, write_csv_with_header
from gaussian_resources.utils.error_utils import helper_cli_error, helper_quantifier_error
from gaussian_resources.utils.json_utils import SCHEMA_VERSION, JSONStateUtility
from gaussian_resources.utils.logger_utils import LoggerUtility
from gaussian_resources.utils.settings_utils import DEFAULT_SETTINGS, Settings, load_settings


class TestSettings:
    def test_defaults(self):
        assert load_settings() == DEFAULT_SETTINGS
        assert DEFAULT_SETTINGS.tol == 1e-9
        assert DEFAULT_SETTINGS.log_base == 'e'

    def test_dotenv_file(self, tmp_path):
        path = tmp_path / 'settings.env'
        path.write_text('GAUSSIAN_TOL=1e-7\nGAUSSIAN_LOG_BASE=2\nGAUSSIAN_WORKERS=3\n')
        settings = load_settings(str(path))
        assert settings.tol == 1e-7
        assert settings.log_base == '2'
        assert settings.workers == 3
        assert settings.search_budget == DEFAULT_SETTINGS.search_budget

    def test_override_skips_unset_values(self):
        settings = Settings(tol=1e-6).override(tol=None, workers=2)
        assert settings.tol == 1e-6
        assert settings.workers == 2

    def test_invalid_values(self, tmp_path):
        path = tmp_path / 'bad.env'
        path.write_text('GAUSSIAN_SEARCH_BUDGET=many\n')
        with pytest.raises(InvalidParameterError):
            load_settings(str(path))
        path.write_text('GAUSSIAN_LOG_BASE=10\n')
        with pytest.raises(InvalidParameterError):
            load_settings(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_settings(str(tmp_path / 'absent.env'))


class TestJSONStateUtility:
    def test_state_round_trip_is_exact(self, tmp_path, rng):
        s = random_state(ModeTable((1.0, 2.5), (1, 3)), rng)
        path = str(tmp_path / 'state.json')
        JSONStateUtility.write_json(JSONStateUtility.state_to_dict(s, {'seed': 4}), path)
        data = JSONStateUtility.read_json(path)
        assert data['schema_version'] == SCHEMA_VERSION
        assert data['sector_sizes'] == [1, 3]
        assert data['metadata'] == {'seed': 4}
        loaded = JSONStateUtility.state_from_dict(data)
        assert loaded.modes == s.modes
        assert np.array_equal(loaded.covariance, s.covariance)
        assert np.array_equal(loaded.displacement, s.displacement)

    def test_qqpp_input_is_reordered(self):
        data = {
            'schema_version': 1, 'omegas': [1.0], 'spatial_modes': 2, 'ordering': 'qqpp',
            'displacement': [1.0, 2.0, 10.0, 20.0],
            'covariance': np.diag([1.0, 2.0, 3.0, 4.0]).tolist(),
        }
        s = JSONStateUtility.state_from_dict(data)
        assert s.displacement.tolist() == [1.0, 10.0, 2.0, 20.0]
        assert np.diag(s.covariance).tolist() == [1.0, 3.0, 2.0, 4.0]

    def test_unphysical_states_load(self):
        data = {'omegas': [1.0], 'spatial_modes': 1,
                'displacement': [0.0, 0.0], 'covariance': [[0.5, 0.0], [0.0, 0.5]]}
        assert JSONStateUtility.state_from_dict(data).covariance[0, 0] == 0.5

    @pytest.mark.parametrize('patch', [
        {'schema_version': 2},
        {'ordering': 'pqpq'},
        {'omegas': ['one']},
        {'spatial_modes': 'two'},
        {'covariance': [[1.0, 0.0], [0.0, 1.0]]},
    ])
    def test_malformed_state_files(self, patch):
        data = {'schema_version': 1, 'omegas': [1.0], 'spatial_modes': 2,
                'displacement': [0.0] * 4, 'covariance': np.eye(4).tolist()}
        data.update(patch)
        with pytest.raises(StructuralError):
            JSONStateUtility.state_from_dict(data)

    def test_channel_round_trip(self, pair_table):
        ch = loss_channel(0.3, pair_table, nbar_env=0.5)
        data = json.loads(JSONStateUtility.dumps(JSONStateUtility.channel_to_dict(ch)))
        assert set(data) >= {'T', 'N', 'v'}
        loaded = JSONStateUtility.channel_from_dict(data)
        assert np.array_equal(loaded.noise, ch.noise)

    def test_symplectic_file(self):
        S = JSONStateUtility.symplectic_from_dict(
            {'omegas': [1.0], 'spatial_modes': 1, 'S': [[2.0, 0.0], [0.0, 0.5]]})
        assert S.matrix[0, 0] == 2.0

    def test_read_json_requires_an_object(self, tmp_path):
        path = tmp_path / 'list.json'
        path.write_text('[1, 2]')
        with pytest.raises(StructuralError):
            JSONStateUtility.read_json(str(path))

    def test_write_to_stdout(self, capsys, coherent_one):
        JSONStateUtility.write_json(JSONStateUtility.state_to_dict(coherent_one))
        data = json.loads(capsys.readouterr().out)
        assert data['displacement'] == [pytest.approx(np.sqrt(2.0)), 0.0]


class TestCSV:
    def test_format_value(self):
        assert format_value(None) == ''
        assert format_value(True) == 'true'
        assert format_value(np.float64(0.1)) == '0.1'
        assert format_value(3) == '3'

    def test_header_and_rows(self, tmp_path):
        path = str(tmp_path / 'out.csv')
        text = write_csv_with_header({'seed': 7, 'log_base': 'e'}, ('sample', 'P', 'E'),
                                     [[0, 1.5, None]], path)
        with open(path, encoding='utf-8') as f:
            assert f.read() == text
        assert text.splitlines() == ['# seed=7', '# log_base=e', 'sample,P,E', '0,1.5,']


class _Probe:
    def __init__(self, logger):
        self.logger = logger

    @helper_quantifier_error
    def fail(self):
        raise ToleranceError('residual too large', residual=1.0, tol=1e-9)


class TestErrorHandling:
    def test_quantifier_errors_are_logged_and_raised(self, tmp_path):
        with LoggerUtility('gaussian_resources.test_errors',
                           log_file=str(tmp_path / 'errors.log')) as utility:
            with pytest.raises(ToleranceError):
                _Probe(utility.logger).fail()
            utility.file_handler.flush()
            log = (tmp_path / 'errors.log').read_text()
        assert "Error in '_Probe', method 'fail'" in log

    @pytest.mark.parametrize('error, code', [
        (StructuralError('bad'), 1),
        (PhysicalityError('bad', violations=[{'invariant': 'physicality'}]), 2),
        (ToleranceError('bad'), 3),
        (FileNotFoundError('absent.json'), 1),
        (np.linalg.LinAlgError('singular'), 3),
        (ValueError('not a number'), 1),
    ])
    def test_cli_exit_codes(self, capsys, error, code):
        @helper_cli_error
        def handler():
            raise error

        assert handler() == code
        payload = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert payload['exit_code'] == code

    def test_error_payload(self):
        payload = PhysicalityError('bad', violations=[{'invariant': 'symmetry'}]).to_dict()
        assert payload['error'] == 'PhysicalityError'
        assert payload['violations'] == [{'invariant': 'symmetry'}]


class TestLoggerUtility:
    def test_levels_and_decorators(self, tmp_path):
        log_path = tmp_path / 'run.log'
        with LoggerUtility('gaussian_resources.test_logger') as utility:
            utility.level = 'debug'
            assert utility.level == logging.DEBUG
            utility.log_file = str(log_path)

            @utility.log_debug
            def traced():
                return 1

            @utility
            def announced():
                return 2

            @utility.log_error
            def broken():
                raise ValueError('boom')

            assert traced() + announced() == 3
            with pytest.raises(ValueError):
                broken()
            utility.file_handler.flush()
            text = log_path.read_text()
            del utility.level
            assert utility.level == logging.WARNING
        assert 'Calling traced' in text
        assert 'announced completed' in text
        assert 'Error in broken: boom' in text

    def test_unknown_level_falls_back_to_warning(self):
        with LoggerUtility('gaussian_resources.test_level') as utility:
            utility.level = 'chatty'
            assert utility.level == logging.WARNING
