import csv
import json

import numpy as np
import pytest

from gaussian_resources.channels.gaussian_channel import loss_channel
from gaussian_resources.cli.entry_point import main
from gaussian_resources.cli.commands import COMMANDS
from gaussian_resources.cli.parser import (
    SUBCOMMANDS, build_parser, mode_table_from_args, parse_indices, parse_modes)
from gaussian_resources.cli.sweep import SWEEP_COLUMNS, SweepConfig, run_sweep, sample_state
from gaussian_resources.core.gaussian_state import GaussianState
from gaussian_resources.core.mode_table import ModeTable
from gaussian_resources.exceptions import InvalidParameterError, StructuralError
from gaussian_resources.utils.json_utils import JSONStateUtility

LN2 = np.log(2.0)


def _stdout_json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def _stderr_payload(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def _write(tmp_path, name, data) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def _read_csv(path):
    with open(path, encoding='utf-8') as f:
        lines = f.read().splitlines()
    header = [line for line in lines if line.startswith('#')]
    rows = list(csv.reader(line for line in lines if not line.startswith('#')))
    return header, rows


class TestParser:
    def test_parse_modes(self):
        assert parse_modes('2x3') == (2, 3)
        with pytest.raises(InvalidParameterError):
            parse_modes('2-3')

    def test_default_omegas(self):
        table = mode_table_from_args('3x2', None)
        assert table.omegas == (1.0, 2.0, 3.0)
        assert table.sector_sizes == (2, 2, 2)
        assert mode_table_from_args('2x1', '0.5,4').omegas == (0.5, 4.0)

    def test_every_subcommand_has_a_handler(self):
        assert set(SUBCOMMANDS) == set(COMMANDS)

    def test_parse_indices(self):
        assert parse_indices('0,2') == (0, 2)
        assert parse_indices(None) is None
        with pytest.raises(InvalidParameterError):
            parse_indices('a,b')

    def test_argument_errors_are_structural(self):
        with pytest.raises(StructuralError):
            build_parser().parse_args(['transmogrify'])

    def test_unknown_subcommand_exit_code(self, capsys):
        assert main(['transmogrify']) == 1
        assert _stderr_payload(capsys)['error'] == 'StructuralError'


class TestReportCommand:
    def test_tmsv_report(self, capsys, tmsv, write_state):
        assert main(['report', write_state(tmsv), '--bipartition', '0']) == 0
        report = _stdout_json(capsys)
        assert report['coherence_max'] == pytest.approx(4 * LN2, abs=1e-10)
        assert report['discord'] == pytest.approx(4 * LN2, abs=1e-10)
        assert report['entanglement'] == pytest.approx(2 * LN2, abs=1e-10)
        assert report['hierarchy_ok'] is True
        assert report['log_base'] == 'e'

    def test_bits_from_config_file(self, capsys, tmp_path, tmsv, write_state):
        config = tmp_path / 'settings.env'
        config.write_text('GAUSSIAN_LOG_BASE=2\n')
        assert main(['report', write_state(tmsv), '--config', str(config)]) == 0
        report = _stdout_json(capsys)
        assert report['coherence_max'] == pytest.approx(4.0, abs=1e-9)
        assert report['entanglement'] is None
        assert report['entanglement_status'] == 'bound-only'

    def test_flag_overrides_config(self, capsys, tmp_path, tmsv, write_state):
        config = tmp_path / 'settings.env'
        config.write_text('GAUSSIAN_LOG_BASE=2\n')
        assert main(['report', write_state(tmsv), '--config', str(config),
                     '--log-base', 'e']) == 0
        assert _stdout_json(capsys)['coherence_max'] == pytest.approx(4 * LN2, abs=1e-10)

    def test_output_file(self, tmp_path, tmsv, write_state):
        out = str(tmp_path / 'report.json')
        assert main(['report', write_state(tmsv), '--out', out]) == 0
        assert JSONStateUtility.read_json(out)['hierarchy_ok'] is True


class TestValidateCommand:
    def test_valid_state(self, capsys, tmsv, write_state):
        assert main(['validate', write_state(tmsv)]) == 0
        assert _stdout_json(capsys)['ok'] is True

    def test_unphysical_state(self, capsys, write_state):
        s = GaussianState(ModeTable.single_frequency(1), np.zeros(2), 0.5 * np.eye(2))
        assert main(['validate', write_state(s)]) == 2
        captured = capsys.readouterr()
        assert json.loads(captured.out)['ok'] is False
        payload = json.loads(captured.err.strip().splitlines()[-1])
        assert payload['error'] == 'PhysicalityError'
        assert payload['violations'][0]['invariant'] == 'physicality'

    def test_missing_file(self, capsys, tmp_path):
        assert main(['validate', str(tmp_path / 'absent.json')]) == 1
        assert _stderr_payload(capsys)['exit_code'] == 1

    def test_not_json(self, capsys, tmp_path):
        path = tmp_path / 'garbage.json'
        path.write_text('{not json')
        assert main(['report', str(path)]) == 1

    def test_missing_field(self, capsys, tmp_path):
        path = _write(tmp_path, 'partial.json', {'omegas': [1.0], 'spatial_modes': 1})
        assert main(['report', path]) == 1

    @pytest.mark.parametrize('header', [
        {'omegas': ['abc'], 'spatial_modes': 1},
        {'omegas': [1.0], 'spatial_modes': 'two'},
        {'omegas': [1.0], 'sector_sizes': [None]},
    ])
    def test_non_numeric_header(self, capsys, tmp_path, header):
        data = dict(header, displacement=[0.0, 0.0], covariance=[[1.0, 0.0], [0.0, 1.0]])
        assert main(['report', _write(tmp_path, 'header.json', data)]) == 1
        payload = _stderr_payload(capsys)
        assert payload['error'] == 'StructuralError'
        assert payload['exit_code'] == 1


class TestDecompositionCommands:
    def test_williamson(self, capsys, tmsv, write_state):
        assert main(['williamson', write_state(tmsv)]) == 0
        assert np.allclose(_stdout_json(capsys)['nu'], [1.0, 1.0])

    def test_bloch_messiah(self, capsys, tmp_path):
        S = np.diag([np.exp(-0.3), np.exp(0.3)])
        path = _write(tmp_path, 'S.json', {'omegas': [1.0], 'spatial_modes': 1, 'S': S.tolist()})
        assert main(['bloch-messiah', '--symplectic', path]) == 0
        result = _stdout_json(capsys)
        assert result['r'] == [pytest.approx(0.3)]
        assert result['residual'] <= 1e-12

    def test_non_symplectic_input(self, capsys, tmp_path):
        path = _write(tmp_path, 'S.json', {'omegas': [1.0], 'spatial_modes': 1,
                                           'S': [[2.0, 0.0], [0.0, 2.0]]})
        assert main(['bloch-messiah', '--symplectic', path]) == 2
        assert _stderr_payload(capsys)['error'] == 'NotSymplecticError'


class TestMaximizeCommand:
    def test_beam_splitter(self, capsys, coherent_and_vacuum, write_state):
        assert main(['maximize', write_state(coherent_and_vacuum),
                     '--method', 'beam-splitter', '--log-base', '2']) == 0
        outcome = _stdout_json(capsys)
        assert outcome['achieved'] == pytest.approx(4.0, abs=1e-9)
        assert outcome['gap'] == pytest.approx(0.0, abs=1e-9)
        assert outcome['log_base'] == '2'
        assert len(outcome['transform']['orthogonal']) == 4

    def test_search_is_reproducible(self, capsys, tmp_path, rng, two_frequency_table, write_state):
        from gaussian_resources.states.random_states import random_state

        path = write_state(random_state(two_frequency_table, rng))
        args = ['maximize', path, '--budget', '15', '--seed', '4']
        assert main(args) == 0
        first = _stdout_json(capsys)
        assert main(args + ['--workers', '3']) == 0
        assert _stdout_json(capsys) == first

    def test_qft_precondition(self, capsys, coherent_and_vacuum, write_state):
        assert main(['maximize', write_state(coherent_and_vacuum), '--method', 'qft']) == 2
        assert _stderr_payload(capsys)['error'] == 'PreconditionError'

    def test_entanglement_needs_bipartition(self, capsys, tmsv, write_state):
        assert main(['maximize', write_state(tmsv), '--objective', 'entanglement',
                     '--budget', '3']) == 1


class TestChannelApplyCommand:
    def test_loss(self, capsys, tmp_path, tmsv, write_state):
        channel = JSONStateUtility.channel_to_dict(loss_channel(0.5, tmsv.modes))
        path = _write(tmp_path, 'loss.json', channel)
        assert main(['channel-apply', write_state(tmsv), '--channel', path]) == 0
        out = JSONStateUtility.state_from_dict(_stdout_json(capsys))
        assert np.allclose(np.diag(out.covariance), 0.5 * 3.0 + 0.5)

    def test_not_cp_channel(self, capsys, tmp_path, tmsv, write_state):
        channel = {'omegas': [1.0], 'spatial_modes': 2, 'T': (2.0 * np.eye(4)).tolist(),
                   'N': np.zeros((4, 4)).tolist()}
        path = _write(tmp_path, 'amp.json', channel)
        assert main(['channel-apply', write_state(tmsv), '--channel', path]) == 2
        assert _stderr_payload(capsys)['error'] == 'NotCompletelyPositiveError'


class TestRandomAndSweep:
    def test_random_state_feeds_report(self, capsys, tmp_path):
        path = str(tmp_path / 'random.json')
        assert main(['random-state', '--seed', '5', '--modes', '2x2', '--out', path]) == 0
        data = JSONStateUtility.read_json(path)
        assert data['metadata']['seed'] == 5
        assert main(['report', path]) == 0
        assert _stdout_json(capsys)['hierarchy_ok'] is True

    def test_random_state_is_seeded(self, tmp_path):
        paths = [str(tmp_path / f'{i}.json') for i in range(2)]
        for path in paths:
            assert main(['random-state', '--seed', '9', '--pure', '--out', path]) == 0
        assert open(paths[0]).read() == open(paths[1]).read()

    def test_sweep_is_independent_of_workers(self, tmp_path):
        outputs = []
        for workers in ('1', '4'):
            out = str(tmp_path / f'sweep{workers}.csv')
            assert main(['sweep', '--samples', '12', '--seed', '3', '--modes', '2x2',
                         '--workers', workers, '--out', out]) == 0
            outputs.append(open(out).read())
        assert outputs[0] == outputs[1]
        header, rows = _read_csv(str(tmp_path / 'sweep1.csv'))
        assert header[0] == '# columns_version=1'
        assert '# seed=3' in header
        assert tuple(rows[0]) == SWEEP_COLUMNS
        assert len(rows) == 13
        assert all(row[6] == 'true' for row in rows[1:])
        assert all(row[5] == '' for row in rows[1:])

    def test_pure_sweep_reports_entanglement(self, tmp_path):
        out = str(tmp_path / 'pure.csv')
        assert main(['sweep', '--samples', '6', '--seed', '8', '--pure', '--modes', '1x3',
                     '--out', out]) == 0
        header, rows = _read_csv(out)
        assert '# bipartition=0' in header
        assert all(row[5] != '' for row in rows[1:])

    def test_sample_depends_only_on_seed_and_index(self):
        config = SweepConfig(ModeTable.single_frequency(3), samples=4, seed=2)
        assert np.array_equal(sample_state(config, 3).covariance,
                              sample_state(config, 3).covariance)
        assert not np.array_equal(sample_state(config, 2).covariance,
                                  sample_state(config, 3).covariance)

    def test_zero_samples(self):
        with pytest.raises(InvalidParameterError):
            SweepConfig(ModeTable.single_frequency(2), samples=0, seed=1)

    def test_run_sweep_returns_rows(self, capsys):
        config = SweepConfig(ModeTable.regular((1.0, 2.0), 2), samples=3, seed=0)
        rows, text = run_sweep(config)
        assert [row[0] for row in rows] == [0, 1, 2]
        assert capsys.readouterr().out == text

    @pytest.mark.slow
    def test_full_sweep(self, tmp_path):
        out = str(tmp_path / 'full.csv')
        assert main(['sweep', '--samples', '1000', '--seed', '2024', '--modes', '2x3',
                     '--workers', '4', '--out', out]) == 0
        _, rows = _read_csv(out)
        assert len(rows) == 1001
