import numpy as np
import pytest

from gaussian_resources.channels.gaussian_channel import apply_channel, loss_channel
from gaussian_resources.core.gaussian_state import GaussianState
from gaussian_resources.core.mode_table import ModeTable
from gaussian_resources.core.operations import displace, tensor_product
from gaussian_resources.exceptions import (
    InvalidParameterError, NotComputableError, PhysicalityError, StructuralError)
from gaussian_resources.quantify.coherence import (
    coherence_max, coherence_rel, coherence_rel_direct, nonuniformity_rel,
    own_delta, sector_coherence_sum)
from gaussian_resources.quantify.correlations import (
    discord_numeric, discord_rel, entanglement_pure, is_pure, mutual_information)
from gaussian_resources.quantify.entropy import (
    entropy_kernel, occupation_kernel, relative_entropy, to_log_base, von_neumann_entropy)
from gaussian_resources.quantify.resource_orchestrator import (
    ResourceQuantifierOrchestrator, hierarchy_check, hierarchy_report)
from gaussian_resources.quantify.strategies import EntanglementQuantifier
from gaussian_resources.states.pure import two_mode_squeezed_vacuum
from gaussian_resources.states.random_states import random_pure_state, random_state
from gaussian_resources.symplectic.random_transforms import random_passive

LN2 = np.log(2.0)

SPOT = 1e-10


class TestEntropy:
    def test_kernels(self):
        assert occupation_kernel(0.0) == 0.0
        assert occupation_kernel(1.0) == pytest.approx(2 * LN2, abs=SPOT)
        assert entropy_kernel(1.0) == 0.0
        assert entropy_kernel(3.0) == pytest.approx(2 * LN2, abs=SPOT)

    def test_thermal_entropy(self, thermal_one):
        assert von_neumann_entropy(thermal_one) == pytest.approx(2 * LN2, abs=SPOT)

    def test_pure_states_have_zero_entropy(self, tmsv, coherent_one):
        assert von_neumann_entropy(tmsv) == 0.0
        assert von_neumann_entropy(coherent_one) == 0.0

    def test_relative_entropy_to_itself(self, rng, pair_table):
        s = random_state(pair_table, rng)
        assert relative_entropy(s, s) == pytest.approx(0.0, abs=1e-9)

    def test_relative_entropy_to_a_different_pure_state(self, coherent_one):
        vacuum = GaussianState.vacuum(coherent_one.modes)
        assert relative_entropy(coherent_one, vacuum) == float('inf')

    def test_relative_entropy_needs_one_table(self, coherent_one, tmsv):
        with pytest.raises(StructuralError):
            relative_entropy(coherent_one, tmsv)

    def test_log_base(self):
        assert to_log_base(2 * LN2, '2') == pytest.approx(2.0)
        assert to_log_base(1.5, 'e') == 1.5
        with pytest.raises(InvalidParameterError):
            to_log_base(1.0, '10')


class TestCoherence:
    def test_coherent_state(self, coherent_one):
        assert coherence_rel(coherent_one) == pytest.approx(2 * LN2, abs=SPOT)
        assert coherence_max(coherent_one) == pytest.approx(2 * LN2, abs=SPOT)

    def test_thermal_state_is_incoherent(self, thermal_one):
        assert coherence_rel(thermal_one) == pytest.approx(0.0, abs=SPOT)
        assert coherence_max(thermal_one) == pytest.approx(0.0, abs=SPOT)
        assert nonuniformity_rel(thermal_one) == pytest.approx(0.0, abs=SPOT)

    def test_tmsv_values(self, tmsv):
        assert coherence_rel(tmsv) == pytest.approx(4 * LN2, abs=SPOT)
        assert coherence_max(tmsv) == pytest.approx(4 * LN2, abs=SPOT)
        assert nonuniformity_rel(tmsv) == pytest.approx(4 * LN2, abs=1e-9)

    def test_closed_form_matches_relative_entropy(self, rng, two_frequency_table):
        for _ in range(5):
            s = random_state(two_frequency_table, rng, r_max=1.0)
            assert coherence_rel(s) == pytest.approx(coherence_rel_direct(s), abs=1e-8)

    def test_nonuniformity_equals_max_coherence(self, rng, two_frequency_table):
        for _ in range(5):
            s = random_state(two_frequency_table, rng, r_max=1.0)
            assert nonuniformity_rel(s) == pytest.approx(coherence_max(s), abs=1e-8)

    def test_fixed_reference_is_not_smaller(self, rng, two_frequency_table):
        s = random_state(two_frequency_table, rng, r_max=1.0)
        assert nonuniformity_rel(s, (3.0, 0.2)) >= nonuniformity_rel(s) - 1e-9
        with pytest.raises(StructuralError):
            nonuniformity_rel(s, (1.0,))

    def test_own_delta(self, coherent_and_vacuum):
        assert np.allclose(own_delta(coherent_and_vacuum), [1.0])

    def test_sector_sum_for_uncorrelated_sectors(self, rng):
        low = random_state(ModeTable.single_frequency(2, 1.0), rng, r_max=1.0)
        high = random_state(ModeTable.single_frequency(2, 2.0), rng, r_max=1.0)
        s = tensor_product(low, high)
        assert sector_coherence_sum(s) == pytest.approx(coherence_max(s), abs=1e-8)

    def test_passive_invariance_and_maximality(self, rng, two_frequency_table):
        s = random_state(two_frequency_table, rng, r_max=1.0)
        for _ in range(10):
            after = random_passive(two_frequency_table, rng).apply(s)
            assert coherence_max(after) == pytest.approx(coherence_max(s), abs=1e-8)
            assert von_neumann_entropy(after) == pytest.approx(von_neumann_entropy(s), abs=1e-8)
            assert coherence_rel(after) <= coherence_max(s) + 1e-8


class TestCorrelations:
    def test_tmsv(self, tmsv):
        assert discord_rel(tmsv) == pytest.approx(4 * LN2, abs=SPOT)
        assert entanglement_pure(tmsv, (0,)) == pytest.approx(2 * LN2, abs=SPOT)
        assert mutual_information(tmsv, (0,)) == pytest.approx(4 * LN2, abs=SPOT)

    def test_single_mode_has_no_discord(self, coherent_one):
        assert discord_rel(coherent_one) == 0.0
        assert discord_numeric(coherent_one) == 0.0

    def test_entanglement_of_mixed_state(self, tmsv):
        lossy = apply_channel(loss_channel(0.8, tmsv.modes), tmsv)
        assert not is_pure(lossy)
        with pytest.raises(NotComputableError) as e:
            entanglement_pure(lossy, (0,))
        assert e.value.exit_code == 2
        assert EntanglementQuantifier(bipartition=(0,)).quantify(lossy) is None

    @pytest.mark.parametrize('part', [(), (0, 1), (5,)])
    def test_improper_bipartition(self, tmsv, part):
        with pytest.raises(StructuralError):
            entanglement_pure(tmsv, part)

    def test_numeric_discord_matches_closed_form(self, tmsv):
        lossy = apply_channel(loss_channel(0.7, tmsv.modes, nbar_env=0.3), tmsv)
        s = displace(lossy, np.array([0.4, -0.2, 1.0, 0.3]))
        assert discord_numeric(s) == pytest.approx(discord_rel(s), abs=1e-5)


class TestHierarchy:
    def test_check(self):
        assert hierarchy_check(3.0, 2.0, 1.0, 0.5)
        assert not hierarchy_check(1.0, 2.0, 0.5)
        assert not hierarchy_check(3.0, 2.0, 1.0, 1.5)
        assert hierarchy_check(1.0, 1.0 + 1e-10, 1.0)

    def test_tmsv_report(self, tmsv):
        report = hierarchy_report(tmsv, bipartition=(0,))
        assert report.nonuniformity == pytest.approx(4 * LN2, abs=1e-9)
        assert report.coherence == pytest.approx(4 * LN2, abs=SPOT)
        assert report.coherence_max == pytest.approx(4 * LN2, abs=SPOT)
        assert report.discord == pytest.approx(4 * LN2, abs=SPOT)
        assert report.entanglement == pytest.approx(2 * LN2, abs=SPOT)
        assert report.entanglement_status == 'exact'
        assert report.hierarchy_ok
        assert report.nonuniformity_gap == pytest.approx(0.0, abs=1e-9)
        assert report.energy == pytest.approx(2.0)

    def test_report_in_bits(self, tmsv):
        report = hierarchy_report(tmsv, bipartition=(0,), log_base='2', energy_scale=3.0)
        assert report.coherence_max == pytest.approx(4.0, abs=1e-9)
        assert report.entanglement == pytest.approx(2.0, abs=1e-9)
        assert report.log_base == '2'
        assert report.energy == pytest.approx(6.0)
        assert report.to_dict()['bipartition'] == [0]

    def test_mixed_state_reports_a_bound(self, tmsv):
        lossy = apply_channel(loss_channel(0.5, tmsv.modes), tmsv)
        report = hierarchy_report(lossy, bipartition=(0,))
        assert report.entanglement is None
        assert report.entanglement_status == 'bound-only'
        assert report.entanglement_bound == report.discord

    def test_unphysical_state_is_rejected(self):
        s = GaussianState(ModeTable.single_frequency(1), np.zeros(2), 0.5 * np.eye(2))
        with pytest.raises(PhysicalityError):
            hierarchy_report(s)

    def test_unknown_log_base(self, tmsv):
        with pytest.raises(InvalidParameterError):
            hierarchy_report(tmsv, log_base='10')

    def test_orchestrator_keys(self, tmsv):
        results = ResourceQuantifierOrchestrator(bipartition=(1,)).execute(tmsv)
        assert set(results) == {
            'EntropyQuantifier', 'CoherenceQuantifier', 'MaxCoherenceQuantifier',
            'NonUniformityQuantifier', 'DiscordQuantifier', 'EntanglementQuantifier'}

    @pytest.mark.parametrize('omegas, sizes', [((1.0,), (2,)), ((1.0, 2.0), (2, 2)),
                                                ((1.0, 1.5), (1, 3))])
    def test_holds_on_random_states(self, omegas, sizes, rng):
        modes = ModeTable(omegas, sizes)
        for _ in range(20):
            assert hierarchy_report(random_state(modes, rng)).hierarchy_ok

    def test_holds_on_random_pure_states(self, rng, two_frequency_table):
        for _ in range(20):
            s = random_pure_state(two_frequency_table, rng, displacement_scale=1.0)
            report = hierarchy_report(s, bipartition=(0, 2))
            assert report.entanglement_status == 'exact'
            assert report.hierarchy_ok

    def test_tmsv_family(self, pair_table):
        for r in np.linspace(0.1, 1.5, 8):
            s = two_mode_squeezed_vacuum(r, (0, 1), pair_table)
            report = hierarchy_report(s, bipartition=(0,))
            assert report.hierarchy_ok
            assert report.discord == pytest.approx(2 * report.entanglement, rel=1e-9)
