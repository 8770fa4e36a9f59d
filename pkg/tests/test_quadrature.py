"""Adaptive quadrature: plain, endpoint-singular, half-line, and circle means."""

import math

import numpy as np
import pytest

from hilbertnorm.quadrature import (
    QuadratureError,
    QuadResult,
    SingularitySpec,
    circle_mean,
    integrate,
    integrate_halfline,
    integrate_singular,
)

TOL = 1e-10


def test_polynomial_exact():
    res = integrate(lambda t: t ** 3, 0.0, 1.0, TOL)
    assert res.value == pytest.approx(0.25, abs=1e-14)
    assert res.evaluations > 0


def test_sine_integral():
    res = integrate(np.sin, 0.0, math.pi, TOL)
    assert res.value == pytest.approx(2.0, abs=1e-12)
    assert res.error_estimate <= TOL * 2.0 + 1e-14


def test_complex_integrand():
    res = integrate(lambda t: np.exp(1j * t), 0.0, 1.0, TOL)
    want = math.sin(1.0) + 1j * (1.0 - math.cos(1.0))
    assert complex(res.value) == pytest.approx(want, abs=1e-12)


def test_oscillatory_needs_more_panels():
    smooth = integrate(lambda t: t * t, 0.0, 1.0, TOL)
    wiggly = integrate(lambda t: np.sin(40.0 * t) ** 2, 0.0, 1.0, TOL)
    assert wiggly.value == pytest.approx(0.5 - math.sin(80.0) / 160.0, abs=1e-10)
    assert wiggly.evaluations > smooth.evaluations


def test_error_estimate_is_honest():
    rng = np.random.default_rng(314)
    for _ in range(20):
        a, b, c = rng.standard_normal(3)
        res = integrate(lambda t: a * t * t + b * t + c, 0.0, 2.0, 1e-9)
        truth = a * 8.0 / 3.0 + 2.0 * b + 2.0 * c
        assert abs(res.value - truth) <= max(res.error_estimate, 1e-12) + 1e-12


def test_singular_pure_power_right():
    spec = SingularitySpec(right_exponent=-0.9)
    res = integrate_singular(
        lambda t: (1.0 - t) ** -0.9, 0.0, 1.0, spec, 1e-10)
    assert res.value == pytest.approx(10.0, rel=1e-9)
    assert res.singular_flags == (False, True)


def test_singular_both_endpoints_beta():
    spec = SingularitySpec(left_exponent=-0.5, right_exponent=-0.5)
    res = integrate_singular(
        lambda t: t ** -0.5 * (1.0 - t) ** -0.5, 0.0, 1.0, spec, 1e-10)
    assert res.value == pytest.approx(math.pi, rel=1e-10)
    assert res.singular_flags == (True, True)


def test_singular_log_blowup_under_power_majorant():
    spec = SingularitySpec(right_exponent=-0.5)
    res = integrate_singular(
        lambda t: -np.log1p(-t), 0.0, 1.0, spec, 1e-10)
    assert res.value == pytest.approx(1.0, rel=1e-9)


def test_singular_extreme_exponent():
    spec = SingularitySpec(right_exponent=-0.99)
    res = integrate_singular(
        lambda t: (1.0 - t) ** -0.99, 0.0, 1.0, spec, 1e-9)
    assert res.value == pytest.approx(100.0, rel=1e-8)


def test_singularity_spec_rejects_nonintegrable():
    with pytest.raises(ValueError):
        SingularitySpec(right_exponent=-1.0)
    with pytest.raises(ValueError):
        SingularitySpec(left_exponent=-1.3)


def test_undeclared_divergence_raises():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda t: 1.0 / t, 0.0, 1.0, 1e-10, panel_cap=256)
    assert isinstance(info.value.result, QuadResult)


def test_halfline_exponential():
    res = integrate_halfline(lambda x: np.exp(-x), 0.0, 1e-10)
    assert res.value == pytest.approx(1.0, rel=1e-10)


def test_halfline_power_tail():
    res = integrate_halfline(lambda x: x ** -2.0, 1.0, 1e-10)
    assert res.value == pytest.approx(1.0, rel=1e-9)


def test_circle_mean_constant_any_p():
    for p in (1.0, 2.0, 3.5, math.inf):
        assert circle_mean(lambda z: np.ones_like(z), 0.5, p, 1e-10) == (
            pytest.approx(1.0, abs=1e-12))


def test_circle_mean_identity_function():
    # |f(z)| = |z| = r on the circle, so every mean equals r
    for p in (1.0, 2.0, math.inf):
        assert circle_mean(lambda z: z, 0.7, p, 1e-10) == (
            pytest.approx(0.7, abs=1e-10))


def test_circle_mean_quadratic_mean_closed_form():
    # M_2(r, 1+z)^2 = 1 + r^2
    r = 0.6
    got = circle_mean(lambda z: 1.0 + z, r, 2.0, 1e-11)
    assert got == pytest.approx(math.sqrt(1.0 + r * r), rel=1e-9)


def test_circle_mean_sup_norm():
    r = 0.8
    got = circle_mean(lambda z: 1.0 + z, r, math.inf, 1e-10)
    assert got == pytest.approx(1.0 + r, rel=1e-9)


def test_circle_mean_nondecreasing_in_radius():
    rng = np.random.default_rng(2718)
    coeffs = rng.standard_normal(6) + 1j * rng.standard_normal(6)

    def f(z):
        return np.polynomial.polynomial.polyval(z, coeffs)

    means = [circle_mean(f, r, 1.0, 1e-9) for r in (0.2, 0.5, 0.8, 0.95)]
    for lo, hi in zip(means, means[1:]):
        assert hi >= lo - 1e-8


def test_circle_mean_near_saturated_radius():
    # radii a few ulps below 1 must evaluate without domain errors
    r = np.nextafter(1.0, 0.0)
    got = circle_mean(lambda z: z, r, 1.0, 1e-8)
    assert got == pytest.approx(1.0, abs=1e-12)


def test_circle_mean_validation():
    with pytest.raises(ValueError):
        circle_mean(lambda z: z, 1.0, 2.0, 1e-8)
    with pytest.raises(ValueError):
        circle_mean(lambda z: z, -0.1, 2.0, 1e-8)
    with pytest.raises(ValueError):
        circle_mean(lambda z: z, 0.5, 0.5, 1e-8)
    with pytest.raises(ValueError):
        circle_mean(lambda z: z, 0.5, 2.0, 0.0)


def test_integration_is_deterministic():
    def f(t):
        return np.exp(-t) * np.sin(3.0 * t)

    first = integrate(f, 0.0, 5.0, 1e-11)
    second = integrate(f, 0.0, 5.0, 1e-11)
    assert first.value == second.value
    assert first.error_estimate == second.error_estimate
    assert first.evaluations == second.evaluations
