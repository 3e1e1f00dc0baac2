import numpy as np
import pytest

from envcap.canonical import CNOT, SWAP, canonical_unitary, swap_power
from envcap.channels import (
    BipartiteUnitary,
    KrausChannel,
    apply_channel,
    effective_channel,
    entangled_env_channel,
)
from envcap.capacity import (
    BracketError,
    OptimizerOptions,
    coherent_info,
    entangled_helper_coherent_info,
    find_zero_crossing,
    jammer_value,
    max_coherent_info,
    separable_helper_capacity,
    standard_two_copy,
    swap_power_helper_capacity,
    swap_power_helper_outputs,
    theta_two_copy,
    two_copy_coherent_info,
)
from envcap.degradability import Degradability, classify_env
from envcap.linalg import (
    binary_entropy,
    check_density_matrix,
    entropy,
    haar_unitary,
    maximally_entangled,
    maximally_mixed,
    projector,
    random_density_matrix,
    random_pure_state,
    tensor,
)

PI = np.pi
KET0 = np.array([1, 0], dtype=complex)
FAST_OPTS = OptimizerOptions(restarts=4, grid=32, max_iters=400)


def identity_channel():
    return KrausChannel((np.eye(2, dtype=complex),), dim_in=2, dim_out=2)


def a1_eigenvalue_formula(gamma):
    """Receiver spectrum of the swap-edge family, evaluated directly."""
    e1 = (5 - 3 * np.cos(PI * gamma)) / 8
    e3 = (1 + np.cos(PI * gamma)) / 8
    s = 0.0
    for lam, mult in ((e1, 1), (e3, 3)):
        if lam > 1e-12:
            s -= mult * lam * np.log2(lam)
    return s - 1.0


class TestCoherentInfo:
    def test_identity_channel_maximally_mixed(self):
        assert coherent_info(identity_channel(), maximally_mixed(2)) == pytest.approx(
            1.0, abs=1e-12)

    def test_sqrt_swap_vanishes_everywhere(self):
        rng = np.random.default_rng(70)
        for _ in range(20):
            ch = effective_channel(swap_power(0.5), random_pure_state(2, rng))
            rho = random_density_matrix(2, rng)
            assert abs(coherent_info(ch, rho)) < 1e-9

    def test_constant_channel(self):
        rng = np.random.default_rng(71)
        ch = effective_channel(SWAP, random_pure_state(2, rng))
        pure = projector(random_pure_state(2, rng))
        assert coherent_info(ch, pure) == pytest.approx(0.0, abs=1e-10)
        assert coherent_info(ch, maximally_mixed(2)) == pytest.approx(-1.0, abs=1e-10)

    def test_purity_balance(self):
        # with a unitary dilation, pure environment and pure input the
        # global output is pure, so both reductions share a spectrum
        rng = np.random.default_rng(72)
        for _ in range(25):
            ch = effective_channel(haar_unitary(4, rng), random_pure_state(2, rng))
            rho = projector(random_pure_state(2, rng))
            assert abs(coherent_info(ch, rho)) < 1e-9


class TestMaxCoherentInfo:
    def test_identity(self):
        res = max_coherent_info(identity_channel(), FAST_OPTS)
        assert res.value == pytest.approx(1.0, abs=1e-6)
        assert np.abs(res.argmax_input - maximally_mixed(2)).max() < 1e-3

    def test_antidegradable_swap_power(self):
        ch = effective_channel(swap_power(0.75), KET0)
        res = max_coherent_info(ch, FAST_OPTS)
        assert res.value <= 1e-9

    def test_completely_dephasing(self):
        ch = effective_channel(CNOT, KET0)
        res = max_coherent_info(ch, FAST_OPTS)
        assert res.value == pytest.approx(0.0, abs=1e-8)

    def test_concavity_on_degradable_channels(self):
        rng = np.random.default_rng(73)
        checked = 0
        while checked < 50:
            v = haar_unitary(4, rng)
            eta = random_pure_state(2, rng)
            if classify_env(v, eta).tag is not Degradability.DEGRADABLE:
                continue
            ch = effective_channel(v, eta)
            r1 = random_density_matrix(2, rng)
            r2 = random_density_matrix(2, rng)
            mid = coherent_info(ch, (r1 + r2) / 2)
            avg = (coherent_info(ch, r1) + coherent_info(ch, r2)) / 2
            assert mid >= avg - 1e-9
            checked += 1

    def test_antidegradable_zero_bound(self):
        rng = np.random.default_rng(74)
        checked = 0
        while checked < 10:
            v = haar_unitary(4, rng)
            eta = random_pure_state(2, rng)
            if classify_env(v, eta).tag is not Degradability.ANTI_DEGRADABLE:
                continue
            res = max_coherent_info(effective_channel(v, eta), FAST_OPTS)
            assert res.value <= 1e-6
            checked += 1


class TestSeparableHelperCapacity:
    def test_identity_gate(self):
        res = separable_helper_capacity(np.eye(4, dtype=complex), FAST_OPTS)
        assert res.value == pytest.approx(1.0, abs=1e-6)

    def test_cnot(self):
        res = separable_helper_capacity(CNOT, FAST_OPTS)
        assert res.value == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("gamma", [0.5, 0.7, 1.0])
    def test_swap_powers_vanish(self, gamma):
        res = separable_helper_capacity(swap_power(gamma), FAST_OPTS)
        assert res.value == 0.0

    def test_bounded_by_one_qubit(self):
        rng = np.random.default_rng(75)
        for _ in range(3):
            res = separable_helper_capacity(haar_unitary(4, rng), FAST_OPTS)
            assert res.value <= 1.0 + 1e-9


class TestJammer:
    def test_product_gate(self):
        rng = np.random.default_rng(76)
        v = tensor(haar_unitary(2, rng), haar_unitary(2, rng))
        res = jammer_value(v, FAST_OPTS)
        assert res.value == pytest.approx(1.0, abs=1e-6)

    def test_swap(self):
        res = jammer_value(SWAP, FAST_OPTS)
        assert res.value == pytest.approx(0.0, abs=1e-6)

    def test_cnot_matches_dense_grid_oracle(self):
        # frozen from an independent dense double-grid scan (mixed input
        # and environment Bloch-ball grids): the max-min value is zero,
        # attained by pure inputs against dephasing environments
        res = jammer_value(CNOT, FAST_OPTS)
        assert res.value == pytest.approx(0.0, abs=2e-3)


class TestTwoCopy:
    @pytest.mark.parametrize("gamma", [0.5, 0.6, 0.8])
    @pytest.mark.parametrize("t", [0.0, 0.5, 1.0])
    def test_swap_edge_family_closed_form(self, gamma, t):
        w = canonical_unitary((PI / 2, PI / 2, t * PI / 2))
        got = two_copy_coherent_info(standard_two_copy(w, swap_power(gamma)))
        assert got == pytest.approx(a1_eigenvalue_formula(gamma), abs=1e-9)

    def test_environment_output_structure(self):
        w = canonical_unitary((PI / 2, PI / 2, 0.35 * PI / 2))
        spec = standard_two_copy(w, swap_power(0.7))
        psi = np.kron(np.kron(spec.aprime_state, spec.env_state), spec.input_state)
        psi = psi.reshape(2, 2, 2, 2, 2).transpose(0, 1, 3, 2, 4).reshape(32)
        g = np.kron(np.kron(spec.w.matrix, spec.v.matrix), np.eye(2))
        from envcap.linalg import partial_trace
        rho_ff = partial_trace(projector(g @ psi), (2,) * 5, keep=(1, 3))
        expected = tensor(projector(KET0), maximally_mixed(2))
        assert np.abs(rho_ff - expected).max() < 1e-10

    def test_sqrt_swap_self_pairing_vanishes(self):
        g = canonical_unitary((PI / 4, PI / 4, PI / 4))
        assert abs(two_copy_coherent_info(standard_two_copy(g, g))) < 1e-9

    def test_frozen_positive_values(self):
        # golden fixtures computed by this five-qubit path and
        # cross-checked against the closed-form spectra where available
        w = canonical_unitary((PI / 2, PI / 2, 0.0))
        assert two_copy_coherent_info(standard_two_copy(w, swap_power(0.55))) == (
            pytest.approx(0.40173599778915814, abs=1e-10))
        v = canonical_unitary((PI / 4 + PI / 8, PI / 4, PI / 4))
        assert two_copy_coherent_info(standard_two_copy(SWAP, v)) == (
            pytest.approx(0.3200086998669489, abs=1e-10))
        g = canonical_unitary((PI / 4 + PI / 8, PI / 4 + PI / 8, PI / 4 - PI / 8))
        assert two_copy_coherent_info(standard_two_copy(g, g)) == (
            pytest.approx(0.10889606751172232, abs=1e-10))

    def test_theta_family_positive_slices(self):
        g = canonical_unitary((PI / 2, PI / 4 + PI / 8, PI / 4 - PI / 8))
        for theta, expected in ((0.5, 0.0634534988903066),
                                (2 ** -6, 0.024322369533690602),
                                (2 ** -10, 0.0030800722084326493)):
            got = two_copy_coherent_info(theta_two_copy(g, g, theta))
            assert got == pytest.approx(expected, abs=1e-10)
            assert got > 1e-3

    def test_helper_sharing_equivalence(self):
        # swapping in the primed slot hands the helper's entanglement to
        # the receiver: the two-copy value equals the entangled-helper
        # coherent information of the unprimed gate at the maximally
        # mixed input
        rng = np.random.default_rng(77)
        for _ in range(5):
            g = BipartiteUnitary(haar_unitary(4, rng))
            lhs = two_copy_coherent_info(standard_two_copy(SWAP, g))
            rhs = entangled_helper_coherent_info(
                g, maximally_entangled(2), maximally_mixed(2))
            assert abs(lhs - rhs) < 1e-9


class TestZeroCrossing:
    def test_linear_function(self):
        assert find_zero_crossing(lambda x: x - 0.3, 0.0, 1.0, 1e-8) == (
            pytest.approx(0.3, abs=1e-7))

    def test_swap_edge_root(self):
        w = canonical_unitary((PI / 2, PI / 2, 0.0))

        def f(g):
            return two_copy_coherent_info(standard_two_copy(w, swap_power(g)))

        root = find_zero_crossing(f, 0.5, 1.0, 1e-6)
        assert root == pytest.approx(0.6649, abs=5e-4)

    def test_closed_form_agrees_with_state_path(self):
        root_closed = find_zero_crossing(a1_eigenvalue_formula, 0.5, 1.0, 1e-8)
        w = canonical_unitary((PI / 2, PI / 2, 0.0))
        root_path = find_zero_crossing(
            lambda g: two_copy_coherent_info(standard_two_copy(w, swap_power(g))),
            0.5, 1.0, 1e-8)
        assert abs(root_closed - root_path) < 1e-6

    def test_same_sign_bracket_rejected(self):
        with pytest.raises(BracketError):
            find_zero_crossing(lambda x: x + 1.0, 0.0, 1.0, 1e-6)


class TestEntangledHelper:
    def test_product_helper_reduces(self):
        rng = np.random.default_rng(78)
        v = haar_unitary(4, rng)
        eta = random_pure_state(2, rng)
        kappa = tensor(eta, KET0).reshape(-1)
        rho = random_density_matrix(2, rng)
        lhs = entangled_helper_coherent_info(v, kappa, rho)
        rhs = coherent_info(effective_channel(v, eta), rho)
        assert abs(lhs - rhs) < 1e-10

    def test_trivial_gate(self):
        rng = np.random.default_rng(79)
        kappa = random_pure_state(4, rng)
        got = entangled_helper_coherent_info(np.eye(4, dtype=complex), kappa,
                                             maximally_mixed(2))
        assert got == pytest.approx(1.0, abs=1e-10)

    def test_matches_closed_form_value(self):
        for gamma, lam, mu in ((0.6, 0.5, 0.5), (0.31, 0.9, 0.2), (0.8, 0.3, 0.7)):
            kappa = np.zeros(4, complex)
            kappa[0], kappa[3] = np.sqrt(lam), np.sqrt(1 - lam)
            rho = np.diag([mu, 1 - mu]).astype(complex)
            generic = entangled_helper_coherent_info(swap_power(gamma), kappa, rho)
            rho_hb, rho_f = swap_power_helper_outputs(gamma, lam, mu)
            closed = entropy(rho_hb) - entropy(rho_f)
            assert abs(generic - closed) < 1e-10

    def test_z_covariance(self):
        # diagonal-Schmidt helper states commute with Z x Z^dag, so the
        # channel is covariant under Z on the input
        z = np.diag([1.0, -1.0]).astype(complex)
        rng = np.random.default_rng(80)
        for gamma, lam in ((0.37, 0.42), (0.71, 0.9)):
            kappa = np.zeros(4, complex)
            kappa[0], kappa[3] = np.sqrt(lam), np.sqrt(1 - lam)
            ch = entangled_env_channel(swap_power(gamma), kappa)
            rho = random_density_matrix(2, rng)
            lhs = apply_channel(ch, z @ rho @ z.conj().T)
            zz = tensor(z, z.conj().T)
            rhs = zz @ apply_channel(ch, rho) @ zz.conj().T
            assert np.abs(lhs - rhs).max() < 1e-10


class TestHelperOutputs:
    def test_identity_case(self):
        rho_hb, rho_f = swap_power_helper_outputs(0.0, 0.5, 0.5)
        check_density_matrix(rho_hb)
        check_density_matrix(rho_f)
        assert entropy(rho_hb) - entropy(rho_f) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("mu", [0.0, 1.0])
    def test_full_swap_pure_input(self, mu):
        rho_hb, rho_f = swap_power_helper_outputs(1.0, 0.25, mu)
        assert entropy(rho_hb) - entropy(rho_f) == pytest.approx(0.0, abs=1e-12)

    def test_cross_path_agreement(self):
        gamma, lam, mu = 0.6, 0.5, 0.5
        kappa = np.zeros(4, complex)
        kappa[0], kappa[3] = np.sqrt(lam), np.sqrt(1 - lam)
        out = apply_channel(entangled_env_channel(swap_power(gamma), kappa),
                            np.diag([mu, 1 - mu]).astype(complex))
        # channel orders B before H; the closed form is helper-first
        out_hb = out.reshape(2, 2, 2, 2).transpose(1, 0, 3, 2).reshape(4, 4)
        rho_hb, _ = swap_power_helper_outputs(gamma, lam, mu)
        assert np.abs(out_hb - rho_hb).max() < 1e-12

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            swap_power_helper_outputs(0.5, -0.1, 0.5)


def test_optimizer_options_validation():
    with pytest.raises(ValueError):
        OptimizerOptions(restarts=0)
    with pytest.raises(ValueError):
        OptimizerOptions(tol=0.0)


class TestHelperCapacity:
    def test_identity(self):
        res = swap_power_helper_capacity(0.0, FAST_OPTS)
        assert res.value == pytest.approx(1.0, abs=1e-9)

    def test_helper_beats_product_at_intermediate_gamma(self):
        qeh = swap_power_helper_capacity(0.6, FAST_OPTS)
        qh = separable_helper_capacity(swap_power(0.6), FAST_OPTS)
        assert qeh.value == pytest.approx(0.23610676138740194, abs=1e-8)
        assert qh.value == 0.0
        assert qeh.value > qh.value

    def test_vanishes_past_threshold(self):
        assert swap_power_helper_capacity(0.9, FAST_OPTS).value == 0.0
        assert swap_power_helper_capacity(1.0, FAST_OPTS).value == 0.0

    def test_positive_below_threshold(self):
        assert swap_power_helper_capacity(0.74, FAST_OPTS).value > 1e-5
