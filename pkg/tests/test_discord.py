"""Entropic and geometric discord baselines."""

import numpy as np
import pytest

from qfc import (
    BipartiteState,
    DimensionGuardError,
    OptimizerConfig,
    dag,
    entropic_discord,
    geometric_discord,
    kron,
    make_cc,
    make_cq,
    max_entangled,
    measured_state,
    mutual_information,
    pure_from_schmidt,
    random_pure,
    von_neumann_entropy,
    werner,
)
from qfc.states import haar_unitary, random_density

CFG = OptimizerConfig(restarts=8, seed=0)

LN2 = float(np.log(2.0))


class TestEntropy:
    def test_pure_state_has_zero_entropy(self):
        psi = np.array([1.0, 0.0], dtype=complex)
        assert abs(von_neumann_entropy(np.outer(psi, psi.conj()))) <= 1e-12

    def test_maximally_mixed_qubit(self):
        assert abs(von_neumann_entropy(np.eye(2) / 2) - LN2) <= 1e-12

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_uniform_spectrum_gives_log_d(self, d):
        assert abs(von_neumann_entropy(np.eye(d) / d) - np.log(d)) <= 1e-12


class TestMutualInformation:
    def test_product_state_factorizes(self):
        rho = kron(random_density(2, 2, 0), random_density(3, 3, 1))
        assert abs(mutual_information(BipartiteState(rho, 2, 3))) <= 1e-10

    def test_bell_state_has_two_bits(self):
        assert abs(mutual_information(max_entangled(2)) - 2 * LN2) <= 1e-12

    def test_measurement_never_increases_it(self):
        state = werner(0.7)
        u = haar_unitary(2, 4)
        assert mutual_information(measured_state(state, u)) <= mutual_information(state) + 1e-10


class TestEntropicDiscord:
    def test_product_state_gives_zero(self):
        rho = kron(random_density(2, 2, 5), random_density(2, 2, 6))
        result = entropic_discord(BipartiteState(rho, 2, 2), CFG)
        assert abs(result.value) <= 1e-6

    def test_cq_state_gives_zero(self):
        state = make_cq(
            [0.4, 0.6], haar_unitary(2, 7), [random_density(3, 3, j) for j in range(2)]
        )
        assert abs(entropic_discord(state, CFG).value) <= 1e-6

    def test_bell_state_gives_ln2(self):
        result = entropic_discord(max_entangled(2), CFG)
        assert abs(result.value - LN2) <= 1e-4

    def test_pure_state_equals_entanglement_entropy(self):
        state = random_pure((2, 3), 42)
        expected = von_neumann_entropy(state.marginal("a"))
        assert abs(entropic_discord(state, CFG).value - expected) <= 1e-4

    def test_dimension_guard(self):
        state = BipartiteState(np.eye(10) / 10, 5, 2)
        with pytest.raises(DimensionGuardError):
            entropic_discord(state, CFG)


class TestGeometricDiscord:
    def test_cc_state_gives_zero(self):
        state = make_cc([0.3, 0.7], (2, 2), haar_unitary(2, 10), haar_unitary(2, 11))
        assert abs(geometric_discord(state, CFG).value) <= 1e-6

    def test_bell_state_closed_form(self):
        result = geometric_discord(max_entangled(2))
        assert result.method == "closed-form"
        assert abs(result.value - 0.5) <= 1e-12

    def test_maximally_mixed_werner_gives_zero(self):
        assert abs(geometric_discord(werner(0.0), CFG).value) <= 1e-6

    @pytest.mark.parametrize("dims", [(2, 2), (2, 3)])
    def test_pure_closed_form_matches_search(self, dims):
        state = random_pure(dims, 21)
        closed = geometric_discord(state)
        searched = geometric_discord(state, CFG, method="optimized")
        assert closed.method == "closed-form"
        assert searched.method == "optimized"
        assert abs(closed.value - searched.value) <= 1e-4

    def test_closed_form_argopt_attains_the_value(self):
        state = pure_from_schmidt([0.8, 0.2], (2, 2))
        result = geometric_discord(state)
        diff = state.rho - measured_state(state, result.argopt).rho
        distance = float(np.real(np.sum(diff * diff.conj())))
        assert abs(distance - result.value) <= 1e-10

    def test_rejects_unknown_method(self):
        with pytest.raises(ValueError):
            geometric_discord(max_entangled(2), CFG, method="grid")


class TestLocalUnitaryInvariance:
    def test_both_discords_invariant(self):
        state = werner(0.6)
        u = kron(haar_unitary(2, 1), haar_unitary(2, 2))
        rotated = BipartiteState(u @ state.rho @ dag(u), 2, 2)
        assert abs(entropic_discord(state, CFG).value - entropic_discord(rotated, CFG).value) <= 2e-6
        assert abs(geometric_discord(state, CFG).value - geometric_discord(rotated, CFG).value) <= 2e-6
