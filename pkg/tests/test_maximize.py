import numpy as np
import pytest

from gaussian_resources.core.mode_table import ModeTable
from gaussian_resources.core.occupation import mean_occupation
from gaussian_resources.core.operations import displace
from gaussian_resources.exceptions import (
    CrossFrequencyError, InvalidParameterError, NotComputableError,
    PreconditionError, StructuralError, ToleranceError)
from gaussian_resources.maximize.certificate import (
    concentrated_coherence_curve, concentrated_state, equidistribution_certificate)
from gaussian_resources.maximize.equidistribution import (
    BeamSplitterMaximizer, balancing_beam_splitter, balancing_phase,
    qft_equidistribute, spectral_equidistribute)
from gaussian_resources.maximize.maximizers import MAXIMIZERS, get_maximizer
from gaussian_resources.maximize.objectives import objective_value
from gaussian_resources.maximize.outcome import check_energy_preserved
from gaussian_resources.maximize.passive_search import (
    candidate_unitaries, givens_rotation, passive_search)
from gaussian_resources.quantify.coherence import coherence_max, coherence_rel
from gaussian_resources.states.pure import coherent_state, squeezed_vacuum
from gaussian_resources.states.random_states import random_state
from gaussian_resources.states.thermal import ThermalSpec, thermal_state

LN2 = np.log(2.0)


class TestBeamSplitter:
    def test_balances_coherent_and_vacuum(self, coherent_and_vacuum):
        outcome = balancing_beam_splitter(coherent_and_vacuum)
        assert np.allclose(mean_occupation(outcome.state).per_mode, [1.0, 1.0], atol=1e-10)
        assert outcome.achieved == pytest.approx(4 * LN2, abs=1e-10)
        assert outcome.target == pytest.approx(4 * LN2, abs=1e-10)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)
        assert outcome.method == 'beam-splitter'

    def test_uses_the_correlator_phase(self, pair_table):
        s = coherent_state([1.0, 0.5j], pair_table)
        # c = α₁ conj(α₂) = −0.5j, so θ = −π/2 and φ = −π
        assert balancing_phase(s) == pytest.approx(-np.pi)
        outcome = balancing_beam_splitter(s)
        n = mean_occupation(outcome.state).per_mode
        assert n[0] == pytest.approx(n[1], abs=1e-10)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)

    def test_tmsv_is_already_maximal(self, tmsv):
        outcome = balancing_beam_splitter(tmsv)
        assert outcome.initial == pytest.approx(4 * LN2, abs=1e-10)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)

    def test_correlated_mixed_pair(self, rng, pair_table):
        for _ in range(5):
            outcome = balancing_beam_splitter(random_state(pair_table, rng, r_max=1.0))
            assert outcome.gap == pytest.approx(0.0, abs=1e-8)

    def test_needs_two_equal_frequency_modes(self):
        with pytest.raises(StructuralError):
            BeamSplitterMaximizer().maximize(
                coherent_state([1.0, 0.0, 0.0], ModeTable.single_frequency(3)))
        with pytest.raises(CrossFrequencyError):
            BeamSplitterMaximizer().maximize(
                coherent_state([1.0, 0.0], ModeTable((1.0, 2.0), (1, 1))))


class TestFourierMaximizers:
    def test_qft_spreads_squeezing(self):
        modes = ModeTable.single_frequency(3)
        s = squeezed_vacuum([1.0, 0.0, 0.0], [0.0, 0.0, 0.0], modes)
        outcome = qft_equidistribute(s)
        expected = np.sinh(1.0) ** 2 / 3.0
        assert np.allclose(mean_occupation(outcome.state).per_mode, [expected] * 3, atol=1e-10)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)
        assert all(c.certified for c in equidistribution_certificate(outcome.state, 1e-10))

    def test_qft_rejects_displaced_input(self):
        modes = ModeTable.single_frequency(2)
        s = displace(thermal_state(ThermalSpec(modes, (1.0, 0.0))), np.array([1.0, 0, 0, 0]))
        with pytest.raises(PreconditionError) as e:
            qft_equidistribute(s)
        assert e.value.details['max_displacement'] == pytest.approx(1.0)

    def test_qft_rejects_correlated_input(self, tmsv):
        with pytest.raises(PreconditionError):
            qft_equidistribute(tmsv)

    @pytest.mark.parametrize('omegas, sizes', [((1.0,), (3,)), ((1.0, 2.0), (2, 3))])
    def test_spectral_reaches_the_ceiling(self, omegas, sizes, rng):
        modes = ModeTable(omegas, sizes)
        for _ in range(5):
            s = random_state(modes, rng, r_max=1.0)
            outcome = spectral_equidistribute(s)
            assert outcome.gap == pytest.approx(0.0, abs=1e-8)
            assert all(c.certified for c in equidistribution_certificate(outcome.state, 1e-8))

    def test_registry(self, coherent_and_vacuum):
        assert set(MAXIMIZERS) == {'search', 'beam-splitter', 'qft', 'spectral'}
        outcome = get_maximizer('spectral').maximize(coherent_and_vacuum)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)
        with pytest.raises(StructuralError):
            get_maximizer('annealing')


class TestPassiveSearch:
    def test_identity_is_the_first_candidate(self, pair_table):
        candidates = candidate_unitaries(pair_table, 4, seed=3)
        assert len(candidates) == 4
        assert np.allclose(candidates[0].unitary, np.eye(2))
        with pytest.raises(InvalidParameterError):
            candidate_unitaries(pair_table, 0, seed=3)

    def test_larger_budget_appends_candidates(self, pair_table):
        small = candidate_unitaries(pair_table, 5, seed=9)
        large = candidate_unitaries(pair_table, 8, seed=9)
        for a, b in zip(small, large):
            assert np.array_equal(a.unitary, b.unitary)

    def test_never_worse_than_the_input(self, rng, two_frequency_table):
        s = random_state(two_frequency_table, rng)
        outcome = passive_search(s, budget=20, seed=1)
        assert outcome.achieved >= outcome.initial
        assert outcome.achieved <= coherence_max(s) + 1e-8

    def test_deterministic_across_workers(self, rng, two_frequency_table):
        s = random_state(two_frequency_table, rng)
        a = passive_search(s, budget=30, seed=5, workers=1)
        b = passive_search(s, budget=30, seed=5, workers=4)
        assert a.achieved == b.achieved
        assert np.array_equal(a.transform.unitary, b.transform.unitary)

    def test_single_mode_has_nothing_to_gain(self, coherent_one):
        outcome = passive_search(coherent_one, budget=10)
        assert outcome.gap == pytest.approx(0.0, abs=1e-10)

    def test_refine_closes_the_gap(self, rng, pair_table):
        s = random_state(pair_table, rng, r_max=1.0)
        outcome = passive_search(s, budget=10, seed=2, refine=True)
        assert outcome.gap <= 1e-4

    def test_discord_objective(self, tmsv):
        outcome = passive_search(tmsv, objective='discord', budget=10, seed=0)
        assert outcome.achieved >= outcome.initial
        assert outcome.objective == 'discord'

    def test_entanglement_objective(self, tmsv, rng, pair_table):
        outcome = passive_search(tmsv, objective='entanglement', bipartition=(0,), budget=10)
        assert outcome.achieved >= 2 * LN2 - 1e-10
        with pytest.raises(StructuralError):
            objective_value('entanglement', tmsv)
        with pytest.raises(NotComputableError):
            passive_search(random_state(pair_table, rng), objective='entanglement',
                           bipartition=(0,), budget=5)

    def test_unknown_objective(self, tmsv):
        with pytest.raises(StructuralError):
            passive_search(tmsv, objective='magic')

    def test_givens_rotation_is_unitary(self):
        G = givens_rotation(3, 0, 2, 0.4, np.pi / 2)
        assert np.allclose(G.conj().T @ G, np.eye(3))

    @pytest.mark.slow
    def test_full_budget(self, rng, two_frequency_table):
        s = random_state(two_frequency_table, rng)
        outcome = passive_search(s, seed=0, refine=True, workers=4)
        assert outcome.gap <= 1e-4


class TestCertificates:
    def test_uncertified_input(self, coherent_and_vacuum):
        (certificate,) = equidistribution_certificate(coherent_and_vacuum)
        assert not certificate.certified
        assert certificate.deviation == pytest.approx(1.0)
        assert certificate.to_dict()['omega'] == 1.0

    def test_energy_check(self, coherent_and_vacuum, pair_table):
        other = coherent_state([1.0, 0.0], pair_table)
        assert check_energy_preserved(coherent_and_vacuum, coherent_and_vacuum) == 0.0
        with pytest.raises(ToleranceError):
            check_energy_preserved(coherent_and_vacuum, other)

    def test_concentration_curve_increases(self):
        curve = concentrated_coherence_curve(4.0, 6)
        assert np.all(np.diff(curve) > 0)
        for occupied in range(1, 7):
            s = concentrated_state(4.0, occupied, 6)
            assert coherence_rel(s) == pytest.approx(curve[occupied - 1], abs=1e-10)

    def test_concentrated_state_arguments(self):
        with pytest.raises(InvalidParameterError):
            concentrated_state(1.0, 0, 3)
        with pytest.raises(InvalidParameterError):
            concentrated_state(-1.0, 1, 3)
