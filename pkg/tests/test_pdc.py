import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gausspdc.ode import OdeSettings, integrate, to_quadrature_propagator
from gausspdc.pdc import (
    PdcConfig,
    build_propagator,
    is_bisymmetric,
    output_covariance,
    propagator_functions,
    squeezing_parameter,
)
from gausspdc.symplectic import symplectic_eigenvalues, symplectic_form

from _reference import quadrature_map_three, three_mode_covariance

alphas = st.floats(0.0, 1.2)
couplings = st.floats(0.05, 1.2)
lengths = st.floats(0.0, 1.0)
deltas = st.floats(-5.0, 5.0)
pair_counts = st.integers(1, 4)


def config_for_r(r, n_pairs=1, delta=0.0):
    return PdcConfig(alpha=1.0, coupling=1.0, length=r / math.sqrt(2.0),
                     delta=delta, n_pairs=n_pairs)


# scalar fixed-step integration of the effective two-mode squeezer,
# u' = k e^{i d z} conj(v), v' = k e^{i d z} conj(u); independent of the
# package's own integrator
def scalar_squeezer_oracle(alpha, coupling, delta, n_pairs, z_end, steps=20000):
    kappa = math.sqrt(2.0 * n_pairs) * alpha * coupling
    u, v = 1.0 + 0.0j, 0.0 + 0.0j
    h = z_end / steps

    def rhs(z, uu, vv):
        phase = kappa * np.exp(1j * delta * z)
        return phase * np.conj(vv), phase * np.conj(uu)

    for i in range(steps):
        z = i * h
        k1u, k1v = rhs(z, u, v)
        k2u, k2v = rhs(z + h / 2, u + h / 2 * k1u, v + h / 2 * k1v)
        k3u, k3v = rhs(z + h / 2, u + h / 2 * k2u, v + h / 2 * k2v)
        k4u, k4v = rhs(z + h, u + h * k3u, v + h * k3v)
        u = u + h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u)
        v = v + h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
    return u, v


def test_scalar_functions_are_hyperbolic_at_zero_mismatch():
    for r in (0.3, 1.0, 2.5):
        config = config_for_r(r)
        pf = propagator_functions(config, config.length)
        assert pf.u == pytest.approx(math.cosh(r), abs=1e-12)
        assert pf.v == pytest.approx(math.sinh(r), abs=1e-12)
        assert pf.gamma_squared > 0.0


def test_scalar_functions_at_crystal_entrance():
    pf = propagator_functions(PdcConfig(1.0, 1.0, 1.0, delta=3.0), 0.0)
    assert pf.u == 1.0 + 0.0j
    assert pf.v == 0.0 + 0.0j


def test_scalar_functions_match_independent_integration():
    # frozen from scalar_squeezer_oracle(1, 1, 2.5, 1, 0.8) at 200k steps
    u_expected = 1.4990192432340355 + 0.3961797386172524j
    v_expected = 0.6402108292884527 + 0.9970692909415192j
    pf = propagator_functions(PdcConfig(1.0, 1.0, 0.8, delta=2.5), 0.8)
    assert abs(pf.u - u_expected) <= 1e-8
    assert abs(pf.v - v_expected) <= 1e-8
    u_num, v_num = scalar_squeezer_oracle(1.0, 1.0, 2.5, 1, 0.8)
    assert abs(pf.u - u_num) <= 1e-8
    assert abs(pf.v - v_num) <= 1e-8


def test_oscillatory_regime_matches_independent_integration():
    config = PdcConfig(1.0, 1.0, 1.0, delta=4.0)
    pf = propagator_functions(config, 1.0)
    assert pf.gamma_squared < 0.0
    u_num, v_num = scalar_squeezer_oracle(1.0, 1.0, 4.0, 1, 1.0)
    assert abs(pf.u - u_num) <= 1e-8
    assert abs(pf.v - v_num) <= 1e-8


@settings(max_examples=80, deadline=None)
@given(alphas, couplings, lengths, deltas, pair_counts)
def test_bogoliubov_normalization_in_all_regimes(alpha, coupling, length, delta, n_pairs):
    config = PdcConfig(alpha, coupling, length, delta=delta, n_pairs=n_pairs)
    pf = propagator_functions(config, length)
    assert abs(abs(pf.u) ** 2 - abs(pf.v) ** 2 - 1.0) <= 1e-10


def test_scalar_functions_are_continuous_through_the_degenerate_point():
    z = 0.9
    kappa_sq = 2.0  # alpha = coupling = 1, one pair

    def at_gamma_sq(gamma_sq):
        delta = 2.0 * math.sqrt(kappa_sq - gamma_sq)
        config = PdcConfig(1.0, 1.0, z, delta=delta)
        pf = propagator_functions(config, z)
        phase = np.exp(0.5j * delta * z)
        limit_u = phase * (1.0 - 0.5j * delta * z)
        limit_v = phase * math.sqrt(kappa_sq) * z
        return pf, limit_u, limit_v

    exact, limit_u, limit_v = at_gamma_sq(0.0)
    assert exact.gamma_squared == pytest.approx(0.0, abs=1e-13)
    assert abs(exact.u - limit_u) <= 1e-10
    assert abs(exact.v - limit_v) <= 1e-10
    for gamma_sq in (1e-12, -1e-12, 1e-11, -1e-11):
        nearby, limit_u, limit_v = at_gamma_sq(gamma_sq)
        assert abs(nearby.u - limit_u) <= 1e-8
        assert abs(nearby.v - limit_v) <= 1e-8


def test_squeezing_parameter_values():
    assert squeezing_parameter(PdcConfig(1.0, 1.0, 1.0)) == pytest.approx(math.sqrt(2.0))
    threshold = 3.0 * math.log(2.0) / (2.0 * math.sqrt(2.0))
    assert squeezing_parameter(PdcConfig(1.0, 1.0, threshold)) == pytest.approx(
        1.5 * math.log(2.0), abs=1e-14
    )
    assert squeezing_parameter(PdcConfig(1.0, 1.0, 0.0)) == 0.0


def test_propagator_is_identity_at_zero_length():
    np.testing.assert_allclose(
        build_propagator(PdcConfig(1.0, 1.0, 0.0, delta=2.0)), np.eye(6), atol=1e-15
    )
    np.testing.assert_allclose(
        build_propagator(PdcConfig(1.0, 1.0, 0.0, n_pairs=3)), np.eye(14), atol=1e-15
    )


def test_three_mode_propagator_matches_literal_mode_solution():
    config = config_for_r(1.0)
    np.testing.assert_allclose(
        build_propagator(config), quadrature_map_three(1.0), atol=1e-12
    )


def test_propagator_matches_integrator_for_three_pairs():
    config = PdcConfig(1.0, 1.0, 1.0, delta=1.0, n_pairs=3)
    integrated = to_quadrature_propagator(integrate(config, OdeSettings(4000)))
    assert np.abs(build_propagator(config) - integrated).max() <= 1e-8


@settings(max_examples=60, deadline=None)
@given(alphas, couplings, lengths, deltas, pair_counts)
def test_propagator_is_symplectic(alpha, coupling, length, delta, n_pairs):
    config = PdcConfig(alpha, coupling, length, delta=delta, n_pairs=n_pairs)
    m = build_propagator(config)
    omega = symplectic_form(config.n_modes)
    assert np.abs(m.T @ omega @ m - omega).max() <= 1e-10


def test_output_covariance_is_vacuum_at_zero_length():
    np.testing.assert_allclose(
        output_covariance(PdcConfig(1.0, 1.0, 0.0)), np.eye(6), atol=1e-15
    )


def test_output_covariance_matches_hyperbolic_template():
    sigma = output_covariance(config_for_r(1.0))
    np.testing.assert_allclose(sigma, three_mode_covariance(1.0), atol=1e-12)
    assert sigma[0, 0] == pytest.approx(3.7621956910836314, abs=1e-12)
    assert sigma[0, 2] == pytest.approx(2.5645775888056342, abs=1e-12)
    assert sigma[2, 4] == pytest.approx(1.3810978455418155, abs=1e-12)


def test_two_pair_covariance_localizes_with_enhanced_gain():
    from gausspdc.entanglement import localization_transform
    from gausspdc.symplectic import congruence, two_mode_squeezed_cov

    r = 0.7
    sigma = output_covariance(config_for_r(r, n_pairs=2))
    rotated = congruence(sigma, localization_transform(2))
    np.testing.assert_allclose(
        rotated[:4, :4], two_mode_squeezed_cov(math.sqrt(2.0) * r), atol=1e-10
    )
    np.testing.assert_allclose(rotated[4:, 4:], np.eye(6), atol=1e-10)
    np.testing.assert_allclose(rotated[:4, 4:], 0.0, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(alphas, couplings, lengths, deltas, pair_counts)
def test_output_state_is_pure(alpha, coupling, length, delta, n_pairs):
    config = PdcConfig(alpha, coupling, length, delta=delta, n_pairs=n_pairs)
    nu = symplectic_eigenvalues(output_covariance(config))
    assert np.abs(nu - 1.0).max() <= 1e-8


@settings(max_examples=40, deadline=None)
@given(alphas, couplings, lengths, deltas, pair_counts)
def test_output_covariance_is_bisymmetric(alpha, coupling, length, delta, n_pairs):
    config = PdcConfig(alpha, coupling, length, delta=delta, n_pairs=n_pairs)
    assert is_bisymmetric(output_covariance(config))


def test_zero_mismatch_propagators_compose():
    first = PdcConfig(0.9, 1.1, 0.4)
    second = PdcConfig(0.9, 1.1, 0.7)
    total = PdcConfig(0.9, 1.1, 1.1)
    product = build_propagator(second) @ build_propagator(first)
    assert np.abs(build_propagator(total) - product).max() <= 1e-10


def test_bisymmetry_detects_broken_pair_symmetry():
    sigma = three_mode_covariance(0.6)
    assert is_bisymmetric(sigma)
    assert is_bisymmetric(np.eye(6))
    perturbed = sigma.copy()
    perturbed[2, 4] += 1e-6
    assert not is_bisymmetric(perturbed)
    unbalanced = sigma.copy()
    unbalanced[2, 2] += 1e-6  # Var(x_+) != Var(x_-)
    assert not is_bisymmetric(unbalanced)


def test_bisymmetry_rejects_wrong_mode_count():
    with pytest.raises(ValueError):
        is_bisymmetric(np.eye(4))
    with pytest.raises(ValueError):
        is_bisymmetric(np.eye(2))
    with pytest.raises(ValueError):
        is_bisymmetric(np.eye(5))


def test_config_validation():
    with pytest.raises(ValueError):
        PdcConfig(alpha=-0.1, coupling=1.0, length=1.0)
    with pytest.raises(ValueError):
        PdcConfig(alpha=1.0, coupling=0.0, length=1.0)
    with pytest.raises(ValueError):
        PdcConfig(alpha=1.0, coupling=1.0, length=-1.0)
    with pytest.raises(ValueError):
        PdcConfig(alpha=1.0, coupling=1.0, length=1.0, n_pairs=0)
    config = PdcConfig(1.0, 1.0, 1.0, n_pairs=3)
    assert config.n_modes == 7
    assert config.layout.n_quadratures == 14
