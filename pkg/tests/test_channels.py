import numpy as np
import pytest

from gaussian_resources.channels.gaussian_channel import (
    GaussianChannel, apply_channel, compose_channels, displacement_channel,
    identity_channel, loss_channel, unitary_channel, validate_channel)
from gaussian_resources.channels.incoherent import (
    make_ig_channel, minimal_ig_noise, random_ig_channel)
from gaussian_resources.channels.noisy import environment_table, make_gn_channel, random_gn_channel
from gaussian_resources.channels.uniformity import is_uniformity_preserving
from gaussian_resources.core.gaussian_state import GaussianState
from gaussian_resources.core.validation import validate_state
from gaussian_resources.exceptions import (
    InvalidParameterError, NotCompletelyPositiveError, StructuralError)
from gaussian_resources.quantify.coherence import coherence_rel, nonuniformity_rel
from gaussian_resources.states.random_states import random_state
from gaussian_resources.states.thermal import (
    ThermalSpec, UniformSpec, thermal_state, uniform_state)
from gaussian_resources.symplectic.elementary import squeezer


def _is_thermal(s: GaussianState) -> bool:
    """Undisplaced with every covariance block proportional to I₂."""
    expected = np.diag(np.repeat(np.diag(s.covariance)[0::2], 2))
    return np.allclose(s.covariance, expected, atol=1e-10) and np.allclose(s.displacement, 0.0)


class TestGaussianChannel:
    def test_identity_is_cp(self, pair_table):
        assert validate_channel(identity_channel(pair_table)).ok

    def test_amplifier_without_noise_is_not_cp(self, pair_table):
        ch = GaussianChannel(pair_table, 2.0 * np.eye(4), np.zeros((4, 4)), np.zeros(4))
        verdict = validate_channel(ch)
        assert verdict.status == 'not_cp'
        assert verdict.min_eigenvalue < 0
        with pytest.raises(NotCompletelyPositiveError):
            apply_channel(ch, GaussianState.vacuum(pair_table))

    def test_asymmetric_noise_is_malformed(self, pair_table):
        N = np.eye(4)
        N[0, 1] = 1.0
        ch = GaussianChannel(pair_table, np.eye(4), N, np.zeros(4))
        assert validate_channel(ch).status == 'malformed'

    def test_shapes_are_checked(self, pair_table):
        with pytest.raises(StructuralError):
            GaussianChannel(pair_table, np.eye(2), np.zeros((4, 4)), np.zeros(4))

    def test_table_mismatch(self, pair_table, coherent_one):
        with pytest.raises(StructuralError):
            apply_channel(identity_channel(pair_table), coherent_one)

    def test_loss_composes(self, pair_table, rng):
        twice = compose_channels(loss_channel(0.5, pair_table), loss_channel(0.5, pair_table))
        once = loss_channel(0.25, pair_table)
        assert np.allclose(twice.transfer, once.transfer)
        assert np.allclose(twice.noise, once.noise)
        s = random_state(pair_table, rng)
        assert apply_channel(twice, s).allclose(apply_channel(once, s))

    def test_loss_drives_to_environment(self, tmsv):
        out = apply_channel(loss_channel(0.0, tmsv.modes, nbar_env=1.0), tmsv)
        assert np.allclose(out.covariance, 3.0 * np.eye(4))
        with pytest.raises(InvalidParameterError):
            loss_channel(1.5, tmsv.modes)

    def test_unitary_and_displacement_channels(self, pair_table):
        S = squeezer(0.4, 0, pair_table).matrix
        vac = GaussianState.vacuum(pair_table)
        out = apply_channel(unitary_channel(S, pair_table), vac)
        assert np.allclose(out.covariance, S @ S.T)
        shifted = apply_channel(displacement_channel(np.ones(4), pair_table), vac)
        assert np.allclose(shifted.displacement, 1.0)


class TestIncoherentChannel:
    def test_maps_thermal_to_thermal(self, two_frequency_table):
        t = [0.5, 1.2, 0.9, 0.3]
        reflection = np.diag([1.0, -1.0])
        ch = make_ig_channel(two_frequency_table, t,
                             orthogonals=[np.eye(2), reflection, np.eye(2), reflection],
                             permutations=[(1, 0), (0, 1)],
                             weights=minimal_ig_noise(t, [np.eye(2), reflection,
                                                          np.eye(2), reflection]))
        tau = thermal_state(ThermalSpec(two_frequency_table, (0.2, 1.0, 3.0, 0.0)))
        assert _is_thermal(apply_channel(ch, tau))

    def test_random_channels_keep_incoherent_states_incoherent(self, rng, two_frequency_table):
        tau = thermal_state(ThermalSpec(two_frequency_table, (0.5, 1.5, 0.1, 2.0)))
        for _ in range(5):
            out = apply_channel(random_ig_channel(two_frequency_table, rng), tau)
            assert _is_thermal(out)
            assert coherence_rel(out) == pytest.approx(0.0, abs=1e-10)

    def test_not_cp_reports_admissible_weights(self, coherent_one):
        with pytest.raises(NotCompletelyPositiveError) as e:
            make_ig_channel(coherent_one.modes, [2.0], weights=[0.0])
        assert e.value.details['suggested_weights'] == pytest.approx([3.0])
        assert e.value.exit_code == 2

    def test_minimal_noise_of_reflection(self):
        reflection = np.diag([1.0, -1.0])
        assert minimal_ig_noise([1.0], [reflection]) == pytest.approx([2.0])

    def test_malformed_data(self, pair_table):
        with pytest.raises(StructuralError):
            make_ig_channel(pair_table, [1.0])
        with pytest.raises(StructuralError):
            make_ig_channel(pair_table, [1.0, 1.0], orthogonals=[2.0 * np.eye(2)] * 2)
        with pytest.raises(InvalidParameterError):
            make_ig_channel(pair_table, [0.5, 0.5], weights=[-1.0, 1.0])


class TestNoisyChannel:
    DELTA = (0.7, 1.3)

    def test_preserves_its_uniform_state(self, two_frequency_table):
        ch = make_gn_channel(two_frequency_table, self.DELTA, rng=11)
        spec = UniformSpec(two_frequency_table, tuple(2 * d for d in self.DELTA))
        assert is_uniformity_preserving(ch, spec)
        assert validate_channel(ch).ok

    def test_other_uniform_states_are_not_fixed(self, two_frequency_table):
        ch = make_gn_channel(two_frequency_table, self.DELTA, rng=11)
        assert not is_uniformity_preserving(ch, UniformSpec(two_frequency_table, (5.0, 0.1)))

    def test_contracts_nonuniformity(self, two_frequency_table, rng):
        for seed in range(5):
            ch = make_gn_channel(two_frequency_table, self.DELTA, rng=seed)
            s = random_state(two_frequency_table, rng, r_max=1.0)
            before = nonuniformity_rel(s, self.DELTA)
            after = nonuniformity_rel(apply_channel(ch, s), self.DELTA)
            assert after <= before + 1e-9
            assert validate_state(apply_channel(ch, s)).ok

    def test_environment_layout(self, two_frequency_table):
        env = environment_table(two_frequency_table, (0, 3))
        assert env.omegas == (2.0,)
        assert env.sector_sizes == (3,)
        assert environment_table(two_frequency_table, (0, 0)) is None

    def test_without_environment_the_channel_is_passive(self, two_frequency_table):
        ch = make_gn_channel(two_frequency_table, self.DELTA,
                             environment_sizes=(0, 0), rng=3)
        assert np.allclose(ch.noise, 0.0)
        assert np.allclose(ch.transfer @ ch.transfer.T, np.eye(8))

    def test_environment_must_share_delta(self, two_frequency_table):
        with pytest.raises(InvalidParameterError):
            make_gn_channel(two_frequency_table, self.DELTA, environment_delta=(0.0, 0.0))
        with pytest.raises(InvalidParameterError):
            make_gn_channel(two_frequency_table, (-1.0, 0.0))

    def test_uniform_state_maps_to_itself(self, two_frequency_table):
        ch = make_gn_channel(two_frequency_table, self.DELTA, rng=5)
        tau = uniform_state(UniformSpec(two_frequency_table, (1.4, 2.6)))
        assert apply_channel(ch, tau).allclose(tau, atol=1e-9)

    def test_random_channel_is_seeded(self, two_frequency_table):
        a = random_gn_channel(two_frequency_table, self.DELTA, rng=21)
        b = random_gn_channel(two_frequency_table, self.DELTA, rng=21)
        assert np.array_equal(a.transfer, b.transfer)
        assert np.array_equal(a.noise, b.noise)
