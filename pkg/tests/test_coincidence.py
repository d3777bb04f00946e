import math

import numpy as np
import pytest

from beamsplit import coincidence as hbt
from beamsplit.errors import DomainError

from oracles import correlation_quad, sinc_series

OMEGA = hbt.DEFAULT_OMEGA


def params_at(two_omega_tau: float, omega: float = OMEGA) -> hbt.CoincidenceParams:
    tau = two_omega_tau / (2 * omega)
    return hbt.CoincidenceParams(omega, tau / 2, tau)


# -- sinc ---------------------------------------------------------------------


def test_sinc_values():
    assert hbt.sinc(0.0) == 1.0
    assert abs(hbt.sinc(math.pi)) < 1e-16
    assert hbt.sinc(math.pi / 2) == pytest.approx(sinc_series(math.pi / 2), abs=1e-15)
    assert hbt.sinc(math.pi / 2) == pytest.approx(0.636620, abs=1e-6)


def test_sinc_even_bounded_and_zeros():
    u = np.linspace(-50, 50, 2001)
    assert np.array_equal(hbt.sinc(u), hbt.sinc(-u))
    assert np.all(np.abs(hbt.sinc(u)) <= 1.0)
    for n in range(1, 10):
        assert abs(hbt.sinc(n * math.pi)) < 1e-15


# -- params -------------------------------------------------------------------


def test_params_defaults():
    p = hbt.CoincidenceParams(OMEGA, 3e-9)
    assert p.tau == 6e-9
    assert p.delta_k_rate == pytest.approx(2 * math.pi / 3e-9, rel=1e-12)
    assert p.coherence_length == pytest.approx(299_792_458.0 * 3e-9)


@pytest.mark.parametrize("args", [(0.0, 1e-9), (OMEGA, 0.0), (OMEGA, 1e-9, -1e-9)])
def test_params_reject(args):
    with pytest.raises(DomainError):
        hbt.CoincidenceParams(*args)


# -- instantaneous correlation ------------------------------------------------


def test_instantaneous_at_origin():
    p = hbt.CoincidenceParams(OMEGA, 2e-9)
    c = hbt.instantaneous_correlation(p, 0.0)
    assert c == 0.5j


def test_instantaneous_zero_at_first_sinc_zero():
    p = hbt.CoincidenceParams(OMEGA, 2e-9)
    t = math.pi / p.delta_k_rate
    assert abs(hbt.instantaneous_correlation(p, t)) < 1e-16


def test_instantaneous_modulus_even_and_omega_free():
    t = np.linspace(-5e-9, 5e-9, 401)
    a = hbt.instantaneous_correlation(hbt.CoincidenceParams(OMEGA, 2e-9), t)
    b = hbt.instantaneous_correlation(hbt.CoincidenceParams(7 * OMEGA, 2e-9), t)
    u = 2 * math.pi / 2e-9 * t
    expected = np.abs(np.where(u == 0, 1.0, np.sin(u) / np.where(u == 0, 1, u))) / 2
    assert np.allclose(np.abs(a), expected, atol=1e-15)
    assert np.allclose(np.abs(a), np.abs(b), atol=1e-15)
    assert np.allclose(np.abs(a), np.abs(a[::-1]), atol=1e-15)


# -- closed form ----------------------------------------------------------------


def test_analytic_zero_window():
    assert hbt.correlation_analytic(hbt.CoincidenceParams(OMEGA, 1e-9, 0.0)) == 0.0


def test_analytic_at_first_sinc_zero():
    assert hbt.correlation_analytic(params_at(math.pi)) == pytest.approx(0.25, abs=1e-15)


def test_analytic_at_quarter_period():
    expected = (1 - sinc_series(math.pi / 2)) / 4
    assert hbt.correlation_analytic(params_at(math.pi / 2)) == pytest.approx(expected, abs=1e-15)
    assert expected == pytest.approx(0.090845, abs=1e-6)


# -- quadrature -----------------------------------------------------------------


def test_numeric_step_matches_closed_form():
    p = params_at(math.pi)
    assert hbt.correlation_numeric(p, "step", 10_000) == pytest.approx(0.25, abs=1e-6)


def test_numeric_sinc2_zero_window():
    assert hbt.correlation_numeric(hbt.CoincidenceParams(OMEGA, 1e-9, 0.0), "sinc2") == 0.0


@pytest.mark.parametrize("two_omega_tau", [0.3, 2.0, math.pi, 4.49, 9.0, 17.0])
@pytest.mark.parametrize("kernel", ["step", "sinc2"])
def test_numeric_matches_adaptive_quadrature(two_omega_tau, kernel):
    p = params_at(two_omega_tau)
    ref = correlation_quad(p.omega, p.tau, p.tau_c, kernel)
    assert hbt.correlation_numeric(p, kernel, 10_000) == pytest.approx(ref, abs=1e-9)


def test_numeric_fixed_coherence_time_step_clips_to_window():
    # tau < tau_c: the step covers the whole window
    p = hbt.CoincidenceParams(OMEGA, 10e-9, 2e-9)
    ref = correlation_quad(p.omega, p.tau, p.tau_c, "step")
    assert hbt.correlation_numeric(p, "step") == pytest.approx(ref, abs=1e-9)


def test_numeric_rejects_few_points_and_bad_kernel():
    p = params_at(1.0)
    with pytest.raises(DomainError):
        hbt.correlation_numeric(p, "step", 63)
    with pytest.raises(DomainError):
        hbt.correlation_numeric(p, "gauss")


# -- intensities and normalization ----------------------------------------------


def test_output_intensities_limits():
    assert hbt.output_intensities(hbt.CoincidenceParams(OMEGA, 1e-9, 0.0)) == (1.0, 0.0)
    i_t, i_r = hbt.output_intensities(hbt.CoincidenceParams(OMEGA, 1e-9, math.pi / OMEGA))
    assert i_t == pytest.approx(0.5, abs=1e-15)
    assert i_r == pytest.approx(0.5, abs=1e-15)


def test_output_intensities_sum_random():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        omega = 10 ** rng.uniform(6, 10)
        tau = 10 ** rng.uniform(-12, -7)
        i_t, i_r = hbt.output_intensities(hbt.CoincidenceParams(omega, 1e-9, tau))
        assert abs(i_t + i_r - 1.0) <= 1e-15


def test_normalized_correlation():
    assert hbt.normalized_correlation(0.2, 0.6, 0.4) == pytest.approx(0.2)
    p = params_at(math.pi)
    c = hbt.normalized_correlation(hbt.correlation_numeric(p, "step"), *hbt.output_intensities(p))
    assert c == pytest.approx(0.25, abs=1e-6)
    with pytest.raises(ZeroDivisionError):
        hbt.normalized_correlation(0.1, 0.0, 0.0)


# -- sweep ----------------------------------------------------------------------


def test_sweep_analytic_bounds_and_first_crossing():
    taus = np.linspace(0, 3 * math.pi / OMEGA, 3001)
    curve = hbt.hbt_sweep(OMEGA, taus, "analytic")
    assert curve.c_norm[0] == 0.0
    # global maximum of (1 - sinc)/4 from the minimum of sinc, found independently
    from scipy.optimize import minimize_scalar

    m = minimize_scalar(lambda u: sinc_series(u, 60), bounds=(3.5, 5.5), method="bounded")
    bound = (1 - m.fun) / 4
    assert bound == pytest.approx(0.3043, abs=1e-4)
    assert np.all(curve.c_norm <= bound + 1e-12)
    first = np.argmax(curve.c_norm >= 0.25)
    assert 2 * OMEGA * taus[first] == pytest.approx(math.pi, abs=2 * OMEGA * (taus[1] - taus[0]))


def test_sweep_step_equals_analytic_coupled():
    taus = np.linspace(0, 3 * math.pi / OMEGA, 40)
    a = hbt.hbt_sweep(OMEGA, taus, "analytic")
    s = hbt.hbt_sweep(OMEGA, taus, "step")
    assert np.max(np.abs(a.c_norm - s.c_norm)) < 1e-6


def test_sweep_sinc2_deviation_in_first_negative_lobe():
    taus = np.linspace(0, 3 * math.pi / OMEGA, 100)
    a = hbt.hbt_sweep(OMEGA, taus, "analytic")
    s = hbt.hbt_sweep(OMEGA, taus, "sinc2")
    assert s.c_norm[0] == 0.0
    worst = taus[np.argmax(np.abs(a.c_norm - s.c_norm))]
    assert math.pi < 2 * OMEGA * worst < 2 * math.pi


def test_sweep_fixed_coherence_time():
    taus = np.array([0.0, 1e-9, 2e-9, 4e-9])
    curve = hbt.hbt_sweep(OMEGA, taus, "step", tau_c=2e-9)
    p = hbt.CoincidenceParams(OMEGA, 2e-9, 4e-9)
    assert curve.c_norm[-1] == pytest.approx(hbt.correlation_analytic(p), abs=1e-6)


def test_sweep_rejects_negative_tau():
    with pytest.raises(DomainError):
        hbt.hbt_sweep(OMEGA, [-1e-9, 0.0])
