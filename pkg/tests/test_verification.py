"""Tests for the verification checks and their shared objectives."""

import math

import numpy as np
import pytest

from hilbertnorm.verification import (
    CHECK_NAMES,
    CheckReport,
    alpha_bound_values,
    alpha_bounds_order,
    alpha_lower_bound,
    alpha_unboundedness_witness,
    alpha_upper_bound,
    bloch_a_objective,
    bloch_b_objective,
    compute_A,
    compute_B,
    gamma_identities,
    h1_lower_bound,
    h1_sup_objective,
    hinf_norm,
    hinf_objective,
    hinf_sup_objective,
    modulus_mean_bands,
    norm_bloch_to_blochlog,
    representation_agreement,
    unboundedness_profile,
)

PI_HALF_MINUS_HALF = math.pi / 2.0 - 0.5


def test_check_names_registry():
    assert CHECK_NAMES == (
        "bloch-A-constant",
        "bloch-B-constant",
        "bloch-to-blochlog-norm",
        "alpha-lower-bound-1.5",
        "alpha-upper-bound-1.5",
        "alpha-bounds-order",
        "alpha-unbounded-0.5",
        "alpha-unbounded-2",
        "alpha-unbounded-2.5",
        "h1-upper-internals",
        "h1-lower-bound-0.5",
        "h1-lower-bound-0.99",
        "hinf-norm",
        "series-integral-agreement",
        "modulus-mean-bands",
        "gamma-identities",
    )


# ---------------------------------------------------------------------------
# shared objectives


def test_h1_sup_objective_values():
    assert h1_sup_objective(0.0) == 1.0
    assert h1_sup_objective(1e8) == pytest.approx(1.0, abs=1e-7)
    # interior values stay strictly below the limits
    assert h1_sup_objective(1.0) < 1.0


def test_hinf_sup_objective_values():
    assert hinf_sup_objective(0.0) == 1.0
    assert hinf_sup_objective(1e8) == pytest.approx(0.5, abs=1e-7)
    # the objective dips below its x -> infinity limit at moderate x
    assert 0.0 < hinf_sup_objective(2.0) < 0.5


def test_hinf_objective_values():
    assert hinf_objective(0.0) == 1.0
    assert hinf_objective(0.5) < 1.0


def test_bloch_a_objective_at_zero():
    assert bloch_a_objective(1e-10)(0.0) == pytest.approx(0.5, abs=1e-12)


def test_bloch_b_objective_is_finite():
    val = bloch_b_objective(1e-9)(0.5)
    assert math.isfinite(val)
    assert val > 0.0


# ---------------------------------------------------------------------------
# closed-form bounds for the power weights


def test_alpha_bound_values_frozen():
    lower, upper = alpha_bound_values(1.5)
    assert lower == pytest.approx(PI_HALF_MINUS_HALF, abs=1e-14)
    assert upper == pytest.approx(math.pi + 2.0, abs=1e-14)
    lower, upper = alpha_bound_values(1.1)
    assert lower == pytest.approx(0.614677076764987305, rel=1e-12)
    assert upper == pytest.approx(11.2775184957416307, rel=1e-12)
    lower, upper = alpha_bound_values(1.9)
    assert lower == pytest.approx(5.08974638200437113, rel=1e-12)
    assert upper == pytest.approx(20.1664073846305196, rel=1e-12)


def test_alpha_bound_lower_poles_cancel_near_one():
    # both terms of L blow up as alpha -> 1+ but their sum stays bounded:
    # the value at 1.001 is *below* the value at 1.5
    near_one, _ = alpha_bound_values(1.001)
    mid, _ = alpha_bound_values(1.5)
    assert near_one == pytest.approx(0.557375021055648264, rel=1e-10)
    assert near_one < mid


@pytest.mark.parametrize("alpha", [0.9, 1.0, 1.0005, 1.9995, 2.0, 2.5])
def test_alpha_window_rejected(alpha):
    with pytest.raises(ValueError):
        alpha_bound_values(alpha)
    with pytest.raises(ValueError):
        alpha_upper_bound(alpha)


def test_alpha_window_endpoints_accepted():
    alpha_bound_values(1.001)
    alpha_bound_values(1.999)


def test_alpha_upper_bound_report():
    rep = alpha_upper_bound(1.5)
    assert isinstance(rep, CheckReport)
    assert rep.name == "alpha-upper-bound-1.5"
    assert rep.passed
    assert rep.computed == pytest.approx(math.pi + 2.0, abs=1e-12)


def test_alpha_bounds_order_default_grid():
    rep = alpha_bounds_order()
    assert rep.passed
    assert rep.computed == pytest.approx(-4.0692023001415878, rel=1e-10)
    assert rep.computed < 0.0


def test_alpha_bounds_order_custom_grid():
    rep = alpha_bounds_order((1.3, 1.5))
    assert rep.passed
    assert rep.computed < 0.0


def test_alpha_lower_bound_report():
    rep = alpha_lower_bound(1.5, 1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(PI_HALF_MINUS_HALF, abs=1e-8)


# ---------------------------------------------------------------------------
# unboundedness witnesses


def test_unboundedness_profile_shape():
    js, rs, vals = unboundedness_profile(0.5)
    assert js.shape == rs.shape == vals.shape == (20,)
    assert js[0] == 1 and js[-1] == 20
    assert rs[0] == 0.5
    assert rs[-1] == 1.0 - 0.5 ** 20
    assert np.all(np.diff(vals) > 0.0)


def test_unboundedness_profile_partial_integrals():
    _, _, vals = unboundedness_profile(2.5)
    assert np.all(np.diff(vals) > 0.0)
    assert vals[-1] > 10.0 * vals[9]


@pytest.mark.parametrize("alpha", [0.0, 1.0, 1.5, -0.5])
def test_unboundedness_profile_domain(alpha):
    with pytest.raises(ValueError):
        unboundedness_profile(alpha)


def test_unboundedness_witness_reports():
    rep = alpha_unboundedness_witness(0.5)
    assert rep.passed
    assert rep.computed == pytest.approx(17.760522725163636, rel=1e-9)
    rep = alpha_unboundedness_witness(2.0)
    assert rep.passed
    assert rep.computed == pytest.approx(1.9092131425856158, rel=1e-9)
    rep = alpha_unboundedness_witness(2.5)
    assert rep.passed
    assert rep.computed == pytest.approx(32.023436550659873, rel=1e-9)


# ---------------------------------------------------------------------------
# individual check reports


def test_compute_a_report():
    rep = compute_A(1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(1.5, abs=1e-9)
    assert "r -> 0" in rep.detail


def test_compute_b_report():
    rep = compute_B(1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(1.2048755513373923, abs=1e-10)
    assert math.log(2.0) < rep.computed < 2.0 * math.log(2.0)
    assert rep.computed < 1.5


def test_norm_bloch_to_blochlog_report():
    rep = norm_bloch_to_blochlog(1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(1.5, abs=1e-6)


def test_hinf_norm_report():
    rep = hinf_norm(1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(1.0, abs=1e-10)


def test_h1_lower_bound_report():
    rep = h1_lower_bound(0.5, 1e-8)
    assert rep.passed
    assert rep.computed == pytest.approx(1.6944261753566803, abs=1e-9)


def test_gamma_identities_report():
    rep = gamma_identities(1e-8)
    assert rep.passed
    assert rep.computed <= 1e-12


def test_modulus_mean_bands_report():
    rep = modulus_mean_bands(1e-8)
    assert rep.passed


def test_representation_agreement_truncation_too_small():
    # with only 16 output coefficients the constant input cannot reproduce
    # the integral form; the check must fail gracefully with a finite
    # residual, not raise
    rep = representation_agreement(1e-8, truncation=16)
    assert not rep.passed
    assert math.isfinite(rep.computed)
    assert rep.computed > 1e-6
    assert "output order 16" in rep.detail
