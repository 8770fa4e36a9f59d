"""End-to-end verification checks for the integral-operator norm bounds.

Each check computes one of the package's headline quantities from scratch —
operator norms between weighted and log-weighted growth spaces, the
two-sided bounds for the power-weight family, the Hardy-space constants,
and the supporting circle-mean and Gamma-function identities — and compares
it against an independently derived target: a closed form, a second
quadrature route, or a proven enclosing interval.  Every check returns a
:class:`CheckReport`; :func:`run_all` executes the default suite in a fixed
order and never raises on a numerical failure (a non-convergent quadrature
is reported as a failed check instead).
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .catalog import (
    DEFAULT_TRUNCATION,
    CoefficientSeries,
    Kind,
    TestFunction,
    eval_series,
    taylor_coeffs,
)
from .hilbertop import (
    apply_integral,
    apply_matrix,
    derivative_at,
    derivative_at_pathshifted,
)
from .norms import bloch_norm, hardy_inequality_gap, hardy_norm, i_c
from .quadrature import (
    QuadratureError,
    SingularitySpec,
    _batched_singular,
    integrate,
    integrate_halfline,
    integrate_singular,
)
from .specfun import beta, gamma, log_weight, reflection_residual
from .supsearch import AT_ZERO, DivergenceError, supremum_halfline, supremum_unit

_LOG2 = math.log(2.0)
_TWO_PI = 2.0 * math.pi

DEFAULT_ALPHA_GRID = (1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9)

CHECK_NAMES = (
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


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification check.

    ``target`` is either a single value that ``computed`` must match to
    within ``tolerance``, or an inclusive ``(low, high)`` interval that must
    contain it; ``detail`` records the sub-facts the check established."""

    name: str
    computed: float
    target: float | tuple
    tolerance: float
    passed: bool
    detail: str


def _w(r):
    return float(log_weight(r))


def _om2(r):
    # (1 - r^2) without cancellation for r near 1
    return (1.0 - r) * (1.0 + r)


def _inner_tol(tol):
    return max(1e-12, 0.01 * tol)


# ---------------------------------------------------------------------------
# objective functions shared with the CLI curve emitter
# ---------------------------------------------------------------------------

def bloch_a_objective(inner_tol):
    """Radial objective whose supremum (plus one) is the constant-witness
    norm: (1+r)/weight(r) times the average of t/((1-r)+tr) over t."""

    def objective(r):
        res = integrate(lambda t: t / ((1.0 - r) + t * r), 0.0, 1.0, inner_tol)
        return (1.0 + r) * float(res.value) / _w(r)

    return objective


def bloch_b_objective(inner_tol):
    """Radial objective whose supremum fixes the half-log witness constant:
    (1+r)/weight(r) times the kernel-weighted average of the composed
    logarithm, whose integrand blows up like a half power at t = 1."""

    def inner(r):
        omr = 1.0 - r
        opr = 1.0 + r
        log_omr = math.log(omr)

        def integrand(t):
            kernel = t / (omr + t * r)
            return kernel * (np.log(omr + t * opr) - log_omr - np.log1p(-t))

        res = integrate_singular(
            integrand, 0.0, 1.0, SingularitySpec(None, -0.5), inner_tol)
        return float(res.value)

    def objective(r):
        return (1.0 + r) * inner(r) / _w(r)

    return objective


def h1_sup_objective(x):
    """x e^x / ((e^x - 1)(1 + x)), evaluated stably; limits 1 at both ends."""
    if x == 0.0:
        return 1.0
    return x / (-math.expm1(-x) * (1.0 + x))


def hinf_sup_objective(x):
    """x e^x / ((e^x - 1)(2x + 1)), evaluated stably; limits (1, 1/2)."""
    if x == 0.0:
        return 1.0
    return x / (-math.expm1(-x) * (2.0 * x + 1.0))


def hinf_objective(r):
    """(1/r) log(1/(1-r)) / weight(r) with the removable value 1 at r = 0."""
    if r == 0.0:
        return 1.0
    return (-math.log1p(-r) / r) / _w(r)


def alpha_bound_values(alpha):
    """Closed-form lower and upper norm bounds (L, U) for the power weight
    alpha in (1, 2): L from a Beta-function evaluation of the extremal
    profile integral, U from the reflection form pi/sin plus 1/(2-alpha)."""
    _require_alpha_window(alpha)
    j_closed = 0.5 * beta(0.5, 2.0 - alpha)
    correction = (3.0 * alpha - 5.0) / (4.0 * (alpha - 1.0) * (2.0 - alpha))
    lower = j_closed / (2.0 * (alpha - 1.0)) + correction
    upper = math.pi / math.sin(math.pi * (alpha - 1.0)) + 1.0 / (2.0 - alpha)
    return lower, upper


def _require_alpha_window(alpha):
    if not 1.0 + 1e-3 <= alpha <= 2.0 - 1e-3:
        raise ValueError(
            "alpha must lie in [1.001, 1.999]: both closed-form bounds "
            "degenerate at the window endpoints")


# ---------------------------------------------------------------------------
# growth-space checks
# ---------------------------------------------------------------------------

def compute_A(tol):
    """Constant-witness norm constant: 1 + sup of the radial objective.

    The supremum is attained in the limit r -> 0 with value 1/2, so the
    constant equals 3/2 exactly; the averaged kernel integral is
    cross-checked against its closed form 1/r + ((1-r)/r^2) log(1-r)."""
    it = _inner_tol(tol)
    objective = bloch_a_objective(it)
    sup = supremum_unit(objective, tol, limit_at_zero=0.5)
    computed = 1.0 + sup.value

    def closed(r):
        return 1.0 / r + ((1.0 - r) / (r * r)) * math.log1p(-r)

    def averaged(r):
        return float(integrate(lambda t: t / ((1.0 - r) + t * r), 0.0, 1.0, it).value)

    cross = max(abs(averaged(r) - closed(r)) for r in (0.25, 0.5, 0.75, 0.9))
    mid = abs(averaged(0.5) - (2.0 - 2.0 * _LOG2))
    passed = (
        abs(computed - 1.5) <= tol
        and sup.boundary == AT_ZERO
        and cross <= 100.0 * it
        and mid <= 1e-9
    )
    detail = (
        f"supremum {sup.value:.12g} attained as r -> 0 ({sup.boundary}); "
        f"closed-form average cross-check max diff {cross:.2e}; "
        f"average at r=1/2 off 2-2log2 by {mid:.2e}"
    )
    return CheckReport("bloch-A-constant", computed, 1.5, tol, passed, detail)


def compute_B(tol):
    """Half-log-witness norm constant B = log 2 + sup/2 of its objective.

    The supremum sits at an interior radius (near 1 - e^-7); B must land
    strictly inside (log 2, 2 log 2) and below the constant-witness value.
    The inner integral at r = 1/2 is dominated by a half-line integral with
    the closed-form value (4/3) log 4, checked for equality."""
    it = _inner_tol(tol)
    objective = bloch_b_objective(it)
    sup = supremum_unit(objective, tol)
    computed = _LOG2 + 0.5 * sup.value

    tail_ok = True
    for k in (12, 13, 14, 15):
        r = 1.0 - 10.0 ** (-k)
        tail_ok = tail_ok and (_LOG2 + 0.5 * objective(r) < 2.0 * _LOG2 + tol)

    r_half = 0.5

    def halfline_integrand(x):
        return (2.0 * (1.0 - r_half) * np.log(x)
                / ((1.0 + r_half) + (1.0 - r_half) * x) ** 2)

    half_val = float(integrate_halfline(halfline_integrand, 1.0, it).value)
    half_bound = (2.0 / (1.0 + r_half)) * math.log(2.0 / (1.0 - r_half))
    h_mid = objective(r_half) * _w(r_half) / (1.0 + r_half)
    half_ok = (abs(half_val - half_bound) <= 1e-6
               and h_mid <= half_val + tol)

    a_report = compute_A(tol)
    passed = (
        _LOG2 - tol <= computed <= 2.0 * _LOG2 + tol
        and tail_ok
        and half_ok
        and computed < a_report.computed
    )
    detail = (
        f"supremum {sup.value:.12g} at r = {sup.arg:.9g} ({sup.boundary}); "
        f"deep-radius values stay below 2 log 2: {tail_ok}; half-line "
        f"dominating integral {half_val:.12g} matches (4/3) log 4 to "
        f"{abs(half_val - half_bound):.2e} and dominates the r=1/2 inner "
        f"integral {h_mid:.9g}; below constant-witness value "
        f"{a_report.computed:.9g}"
    )
    return CheckReport(
        "bloch-B-constant", computed, (_LOG2, 2.0 * _LOG2), tol, passed, detail)


def norm_bloch_to_blochlog(tol):
    """Operator norm from the growth space to its log-weighted image:
    max of the two witness constants, which equals 3/2.

    Both witnesses are recomputed directly as |Hf(0)| plus the supremum of
    the log-weighted derivative objective along the radius, using the
    shifted-path derivative; they must reproduce the two constants."""
    a_report = compute_A(tol)
    b_report = compute_B(tol)
    it = _inner_tol(tol)

    def witness(kind):
        fn = TestFunction(kind)
        base = abs(apply_integral(fn, 0.0, it))

        def objective(r):
            return (_om2(r) * abs(derivative_at_pathshifted(fn, r, it))
                    / _w(r))

        sup = supremum_unit(objective, tol, n_grid=256)
        return base + sup.value

    w1 = witness(Kind.CONSTANT)
    w2 = witness(Kind.HALF_LOG)
    computed = max(a_report.computed, b_report.computed)
    slack = 1e-4
    passed = (
        a_report.passed
        and b_report.passed
        and abs(computed - 1.5) <= tol
        and 1.5 - slack <= w1 <= 1.5 + slack
        and b_report.computed - slack <= w2 <= 1.5 + slack
    )
    detail = (
        f"constant witness {w1:.12g} reaches the norm 3/2; half-log witness "
        f"{w2:.12g} reproduces the second constant {b_report.computed:.12g}; "
        f"norm = max of the two constants"
    )
    return CheckReport(
        "bloch-to-blochlog-norm", computed, 1.5, tol, passed, detail)


# ---------------------------------------------------------------------------
# power-weight family checks
# ---------------------------------------------------------------------------

def alpha_lower_bound(alpha, tol):
    """Lower norm bound L(alpha) for the power weight, two ways, plus a
    direct ratio witness.

    L is assembled from the profile integral J = int (1-t^2)^(1-alpha) dt by
    quadrature and compared with the Beta-function closed form; the ratio
    ||Hf||/||f|| for the extremal f must land in [L - tol, U + 1e-4].  The
    derivative of Hf at 0 is checked against its exact value
    1/(4(2-alpha)), and at alpha = 1.5 an off-axis polar scan confirms the
    radial search dominates."""
    _require_alpha_window(alpha)
    it = _inner_tol(min(tol, 1e-8))

    def j_integrand(t):
        return np.exp((1.0 - alpha) * (np.log1p(-t) + np.log1p(t)))

    j_quad = float(integrate_singular(
        j_integrand, 0.0, 1.0, SingularitySpec(None, 1.0 - alpha), it).value)
    correction = (3.0 * alpha - 5.0) / (4.0 * (alpha - 1.0) * (2.0 - alpha))
    l_quad = j_quad / (2.0 * (alpha - 1.0)) + correction
    l_closed, u_value = alpha_bound_values(alpha)

    fn = TestFunction(Kind.BLOCH_ALPHA_EXTREMAL, alpha)
    h0 = abs(apply_integral(fn, 0.0, it))

    def objective(r):
        return (_om2(r) ** alpha * abs(derivative_at_pathshifted(fn, r, it))
                / _w(r))

    sup = supremum_unit(objective, tol, n_grid=256)
    denom = bloch_norm(fn, alpha, False, tol)
    ratio = (h0 + sup.value) / denom
    bracket_ok = (l_closed - tol <= ratio <= u_value + 1e-4)

    d_closed = 1.0 / (4.0 * (2.0 - alpha))
    lim0 = abs(derivative_at(fn, 0.0, it))
    lim_eps = abs(derivative_at(fn, 1e-6, it))
    limit_ok = (abs(lim0 - d_closed) <= 1e-6 * max(1.0, d_closed)
                and abs(lim_eps - d_closed) <= 1e-5 * max(1.0, d_closed))

    polar_note = "off-axis scan skipped"
    polar_ok = True
    if alpha == 1.5:
        polar_max = 0.0
        for theta in np.linspace(0.0, math.pi, 24):
            for x in np.linspace(0.0, 12.0, 16):
                r = -math.expm1(-x)
                z = complex(r * math.cos(theta), r * math.sin(theta))
                val = (_om2(r) ** alpha
                       * abs(derivative_at_pathshifted(fn, z, 1e-8)) / _w(r))
                polar_max = max(polar_max, val)
        polar_ok = polar_max <= sup.value + 1e-4 * max(1.0, sup.value)
        polar_note = (f"off-axis scan max {polar_max:.9g} does not exceed "
                      f"the radial supremum {sup.value:.9g}")

    passed = (abs(l_quad - l_closed) <= tol and bracket_ok and limit_ok
              and polar_ok)
    detail = (
        f"quadrature route {l_quad:.12g} vs closed form {l_closed:.12g}; "
        f"direct ratio {ratio:.9g} lies in [L - tol, U + 1e-4] with "
        f"U = {u_value:.9g}: {bracket_ok}; derivative at 0 matches "
        f"1/(4(2-alpha)) = {d_closed:.9g} to {abs(lim0 - d_closed):.2e}; "
        f"{polar_note}"
    )
    return CheckReport(
        f"alpha-lower-bound-{alpha:g}", l_quad, l_closed, tol, passed, detail)


def alpha_upper_bound(alpha):
    """Upper norm bound U(alpha), computed through the reflection form
    pi/sin((alpha-1)pi) and re-derived through the Beta-function route
    B(2-alpha, alpha)/(alpha-1); the two must agree to 1e-10.

    Also certifies the two facts the bound rests on: the weight-ratio
    supremum (1+r)^alpha / weight(r) equals 1 (attained as r -> 0) and the
    lower bound never exceeds the upper bound."""
    _require_alpha_window(alpha)
    tol = 1e-10
    u_sin = math.pi / math.sin(math.pi * (alpha - 1.0)) + 1.0 / (2.0 - alpha)
    u_beta = beta(2.0 - alpha, alpha) / (alpha - 1.0) + 1.0 / (2.0 - alpha)
    l_closed, _ = alpha_bound_values(alpha)

    sup = supremum_unit(
        lambda r: (1.0 + r) ** alpha / _w(r), 1e-8, limit_at_zero=1.0)

    passed = (
        abs(u_sin - u_beta) <= tol * max(1.0, abs(u_beta))
        and l_closed <= u_sin + tol
        and abs(sup.value - 1.0) <= 1e-8
        and sup.boundary == AT_ZERO
    )
    detail = (
        f"reflection route {u_sin:.15g} vs Beta route {u_beta:.15g} "
        f"(diff {abs(u_sin - u_beta):.2e}); weight-ratio supremum "
        f"{sup.value:.12g} at r -> 0; lower bound {l_closed:.9g} <= U"
    )
    return CheckReport(
        f"alpha-upper-bound-{alpha:g}", u_sin, u_beta, tol, passed, detail)


def alpha_bounds_order(alpha_grid=DEFAULT_ALPHA_GRID):
    """L(alpha) <= U(alpha) across the working grid of weights."""
    tol = 1e-10
    worst = -math.inf
    worst_alpha = None
    pieces = []
    for a in alpha_grid:
        lower, upper = alpha_bound_values(a)
        gap = lower - upper
        if gap > worst:
            worst = gap
            worst_alpha = a
        pieces.append(f"{a:g}: L={lower:.6g} U={upper:.6g}")
    passed = worst <= tol
    detail = ("largest L - U gap "
              f"{worst:.6g} at alpha = {worst_alpha:g}; " + "; ".join(pieces))
    return CheckReport(
        "alpha-bounds-order", worst, (-math.inf, 0.0), tol, passed, detail)


def unboundedness_profile(alpha):
    """Dyadic-radius growth profile used by the unboundedness witnesses.

    Returns (js, rs, vals) for j = 1..20 and r_j = 1 - 2^-j: for alpha in
    (0, 1) the log-weighted derivative objective of the transformed extremal
    at r_j, for alpha >= 2 the partial integral of the extremal profile over
    [0, r_j].  Either sequence must grow without bound for the corresponding
    operator to be unbounded."""
    if not (0.0 < alpha < 1.0 or alpha >= 2.0):
        raise ValueError(
            "unboundedness witness requires alpha in (0, 1) or alpha >= 2")
    it = 1e-9
    js = np.arange(1, 21)
    rs = 1.0 - 0.5 ** js

    if alpha < 1.0:
        fn = TestFunction(Kind.BLOCH_ALPHA_EXTREMAL, alpha)
        vals = np.array([
            _om2(float(r)) ** alpha * abs(derivative_at(fn, float(r), it))
            / _w(float(r))
            for r in rs
        ])
    else:
        def integrand(t):
            return np.exp((1.0 - alpha) * (np.log1p(-t) + np.log1p(t)))

        vals = np.array([
            float(integrate(integrand, 0.0, float(r), it).value) for r in rs
        ])
    return js, rs, vals


def alpha_unboundedness_witness(alpha):
    """Witness that no finite norm bound exists outside the (1, 2) window.

    For alpha in (0, 1) the log-weighted derivative objective of the
    transformed extremal is evaluated at the dyadic radii 1 - 2^-j,
    j = 1..20: it must grow monotonically with a factor above 10 over the
    last ten doublings.  For alpha >= 2 the partial profile integrals over
    [0, 1 - 2^-j] play the same role; at alpha = 2 the growth is
    logarithmic, so the requirement relaxes to strict monotone growth with
    non-vanishing increments and any factor above 1."""
    js, rs, vals = unboundedness_profile(alpha)
    if alpha < 1.0:
        mode = "log-weighted derivative objective of the transformed extremal"
    else:
        mode = "partial integrals of the extremal profile"

    diffs = np.diff(vals)
    monotone = bool(np.all(diffs > 0.0))
    factor = float(vals[-1] / vals[9])
    if alpha == 2.0:
        sustained = bool(diffs[-1] >= 0.9 * diffs[-2])
        passed = monotone and sustained and factor > 1.0
        target = (1.0, math.inf)
        extra = (f"; increments keep their size "
                 f"(last/prev = {float(diffs[-1] / diffs[-2]):.4f})")
    else:
        passed = monotone and factor > 10.0
        target = (10.0, math.inf)
        extra = ""
    detail = (
        f"{mode}: value {vals[9]:.6g} at j=10 grows to {vals[-1]:.6g} at "
        f"j=20 (factor {factor:.4g}); strictly increasing: {monotone}{extra}"
    )
    return CheckReport(
        f"alpha-unbounded-{alpha:g}", factor, target, 0.0, passed, detail)


# ---------------------------------------------------------------------------
# Hardy-space checks
# ---------------------------------------------------------------------------

def h1_upper_bound_internals(tol, seed=1729):
    """Ingredients of the Hardy-to-log-weighted upper bound 2 pi.

    Verifies the telescoping coefficient identity sum_n 1/((n+k)(n+k+1)) =
    1/(k+1) (partial sums to 10^6 plus the exact tail), the coefficient
    inequality sum |a_n|/(n+1) <= pi ||f|| on seeded random polynomials, and
    that the bound's profile function has supremum exactly 1, attained as
    x -> 0, so the assembled bound is 2 pi * 1."""
    ns = np.arange(1.0, 1_000_001.0)
    worst_tel = 0.0
    for k in range(51):
        partial = float(np.sum(1.0 / ((ns + k) * (ns + k + 1.0))))
        total = partial + 1.0 / (1.0e6 + k + 1.0)
        worst_tel = max(worst_tel, abs(total - 1.0 / (k + 1.0)))
    telescope_ok = worst_tel <= 1e-9

    # The coefficient inequality has O(1) slack on random polynomials, so the
    # norm on the right-hand side only needs a few correct digits; a tighter
    # tolerance would multiply the cost of the 100-polynomial sweep for no
    # extra discriminating power.
    gap_tol = max(tol, 1e-4)
    rng = np.random.default_rng(seed)
    min_margin = math.inf
    hardy_ok = True
    for _ in range(100):
        degree = int(rng.integers(1, 65))
        coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        series = CoefficientSeries(coeffs, degree + 1, 0.0)
        lhs, rhs = hardy_inequality_gap(series, gap_tol)
        margin = rhs - lhs
        min_margin = min(min_margin, margin)
        hardy_ok = hardy_ok and lhs <= rhs + gap_tol * max(1.0, rhs)

    sup = supremum_halfline(
        h1_sup_objective, tol, limit_at_zero=1.0, limit_at_infinity=1.0)
    sup_ok = abs(sup.value - 1.0) <= tol and sup.boundary == AT_ZERO

    computed = _TWO_PI * sup.value
    passed = telescope_ok and hardy_ok and sup_ok
    detail = (
        f"telescoping identity residual {worst_tel:.2e} over k = 0..50; "
        f"coefficient inequality holds on 100 seeded polynomials "
        f"(smallest slack {min_margin:.4g}); profile supremum "
        f"{sup.value:.12g} attained as x -> 0; assembled bound 2 pi"
    )
    return CheckReport(
        "h1-upper-internals", computed, _TWO_PI, tol, passed, detail)


def h1_lower_bound(alpha, tol):
    """Hardy-space ratio witness against its closed-form floor
    Gamma((2-alpha)/2)^2 / Gamma(2-alpha), for alpha in (0, 1).

    The numerator is the supremum over radii of the circle mean of |Hf| for
    the boundary-singular extremal, divided by the log weight.  The mean is
    computed through the factorization |Hf(z)| = |1-z|^(-alpha) |K(z)| with
    K a smooth profile integral, so the boundary spike is integrated by the
    declared-exponent transform rather than resolved pointwise.  The
    denominator is the Hardy norm of the extremal itself.  As alpha -> 1
    the floor approaches pi, which is asserted at alpha = 0.99."""
    if not 0.0 < alpha < 1.0:
        raise ValueError("floor comparison requires alpha in (0, 1)")
    floor = gamma((2.0 - alpha) / 2.0) ** 2 / gamma(2.0 - alpha)
    fn = TestFunction(Kind.HARDY_ALPHA_EXTREMAL, alpha)
    t_tol = 1e-9
    theta_tol = 1e-7

    def smooth_profile(thetas, r):
        z = r * np.exp(1j * thetas)
        omz = 1.0 - z

        def fbatch(t):
            d = omz[:, None] + np.outer(z, t)
            return np.exp((alpha - 1.0) * np.log(d.astype(complex))
                          - alpha * np.log1p(-t)[None, :])

        vals, _, _ = _batched_singular(
            fbatch, 0.0, 1.0,
            SingularitySpec(alpha - 1.0, -alpha), t_tol, len(thetas))
        return np.abs(vals)

    def mean_objective(r):
        if r == 0.0:
            return abs(apply_integral(fn, 0.0, t_tol))
        omr = 1.0 - r

        def theta_integrand(thetas):
            thetas = np.atleast_1d(thetas)
            q2 = omr * omr + 4.0 * r * np.sin(0.5 * thetas) ** 2
            return q2 ** (-0.5 * alpha) * smooth_profile(thetas, r)

        res = integrate_singular(
            theta_integrand, 0.0, math.pi,
            SingularitySpec(-alpha, None), theta_tol)
        return float(res.value) / math.pi

    def objective(r):
        return mean_objective(r) / _w(r)

    sup = supremum_unit(objective, max(tol, 1e-6), n_grid=64, x_max=25.0)
    numerator = sup.value
    denominator = hardy_norm(fn, 1.0, False, tol)
    ratio = numerator / denominator
    ratio_tol = max(tol, 1e-6)

    passed = ratio >= floor - ratio_tol
    pi_note = ""
    if alpha >= 0.99:
        near_pi = abs(floor - math.pi) < 0.05
        passed = passed and near_pi
        pi_note = (f"; floor sits within {abs(floor - math.pi):.4f} of pi, "
                   f"the limiting value as the weight exponent approaches 1")
    detail = (
        f"numerator supremum {numerator:.9g} ({sup.boundary} at "
        f"r = {sup.arg:.6g}), denominator {denominator:.9g}, ratio "
        f"{ratio:.9g} >= floor - tol with floor {floor:.9g}{pi_note}"
    )
    return CheckReport(
        f"h1-lower-bound-{alpha:g}", ratio, (floor, math.inf),
        ratio_tol, passed, detail)


def hinf_norm(tol):
    """Norm of the operator into the log-weighted bounded functions: 1.

    The radial objective (1/r) log(1/(1-r)) / weight(r) has supremum 1
    attained as r -> 0; the matching profile function on the half line has
    the same supremum with far-field limit 1/2, cross-checked numerically;
    and the matrix action on the constant input reproduces the harmonic
    coefficients 1/(n+1) exactly."""
    sup = supremum_unit(hinf_objective, tol, limit_at_zero=1.0)

    sup6 = supremum_halfline(
        hinf_sup_objective, tol, limit_at_zero=1.0, limit_at_infinity=0.5)
    far = hinf_sup_objective(1e9)
    far_ok = abs(far - 0.5) <= 1e-8

    series = apply_matrix(taylor_coeffs(TestFunction(Kind.CONSTANT), 1), 64)
    harmonic = 1.0 / (np.arange(64) + 1.0)
    exact_ok = bool(
        np.array_equal(series.coeffs.real, harmonic)
        and not series.coeffs.imag.any()
    )

    computed = sup.value
    passed = (
        abs(computed - 1.0) <= tol
        and sup.boundary == AT_ZERO
        and abs(sup6.value - 1.0) <= tol
        and sup6.boundary == AT_ZERO
        and far_ok
        and exact_ok
    )
    detail = (
        f"radial objective supremum {computed:.12g} attained as r -> 0; "
        f"half-line profile supremum {sup6.value:.12g} with far value "
        f"{far:.12g} matching 1/2; matrix action on the constant input "
        f"gives 1/(n+1) exactly: {exact_ok}"
    )
    return CheckReport("hinf-norm", computed, 1.0, tol, passed, detail)


# ---------------------------------------------------------------------------
# representation and special-function checks
# ---------------------------------------------------------------------------

def representation_agreement(tol, truncation=DEFAULT_TRUNCATION, seed=1729):
    """Matrix action versus integral form at 20 random points, |z| <= 0.95.

    The constant input has an exact (finite) coefficient series, so its
    residual isolates the output truncation and quadrature error.  The
    half-log input has coefficients decaying only like 1/k, so its input
    series is sized from the certified tail estimate
    |residual| <= 1 / (2 N |1-z|): N is the smallest power of two making
    that estimate comfortably smaller than the agreement tolerance at the
    sampled points (clamped to [2^20, 2^23])."""
    agree_tol = max(tol, 1e-6)
    quad_tol = 1e-9
    rng = np.random.default_rng(seed)
    radii = 0.95 * np.sqrt(rng.random(20))
    angles = 2.0 * math.pi * rng.random(20)
    zs = radii * np.exp(1j * angles)

    def worst_residual(fn, series):
        out = apply_matrix(series, truncation)
        worst = 0.0
        for z in zs:
            direct = apply_integral(fn, complex(z), quad_tol)
            via_series = eval_series(out, complex(z))
            worst = max(worst, abs(via_series - direct))
        return worst

    fn_const = TestFunction(Kind.CONSTANT)
    res_const = worst_residual(fn_const, taylor_coeffs(fn_const, 1))

    min1mz = float(np.min(np.abs(1.0 - zs)))
    sized = 1.25 / (agree_tol * min1mz)
    n_in = 1 << max(20, min(23, math.ceil(math.log2(sized))))
    fn_half = TestFunction(Kind.HALF_LOG)
    res_half = worst_residual(fn_half, taylor_coeffs(fn_half, n_in))

    computed = max(res_const, res_half)
    passed = computed <= agree_tol
    detail = (
        f"constant-input residual {res_const:.3e}; half-log residual "
        f"{res_half:.3e} with input length {n_in} sized from "
        f"min |1-z| = {min1mz:.4f}; output order {truncation}"
    )
    return CheckReport(
        "series-integral-agreement", computed, 0.0, agree_tol, passed, detail)


def modulus_mean_bands(tol):
    """Two-sided bands for the circle means of the boundary kernel powers.

    For I_c(r), the integral mean of |1 - r e^(i theta)|^(-(1+c)):
    c < 0: 1 <= I_c <= Gamma(-c)/Gamma((1-c)/2)^2;
    c > 0: 1 <= (1-r^2)^c I_c <= Gamma(c)/Gamma((1+c)/2)^2;
    c = 0: 1/pi <= r^2 I_0 / log(1/(1-r^2)) <= 1,
    over a grid of exponents and radii."""
    worst = 0.0
    worst_cell = None
    for c in (-0.7, -0.5, -0.3, 0.0, 0.3, 0.5, 0.7):
        for r in (0.1, 0.5, 0.9, 0.99):
            value = i_c(c, r, 1e-10)
            if c < 0.0:
                banded = value
                low, high = 1.0, gamma(-c) / gamma((1.0 - c) / 2.0) ** 2
            elif c > 0.0:
                banded = _om2(r) ** c * value
                low, high = 1.0, gamma(c) / gamma((1.0 + c) / 2.0) ** 2
            else:
                banded = r * r * value / (-math.log1p(-(r * r)))
                low, high = 1.0 / math.pi, 1.0
            violation = max(low - banded, banded - high, 0.0)
            if violation > worst:
                worst = violation
                worst_cell = (c, r, banded, low, high)
    passed = worst <= tol
    if worst_cell is None:
        detail = "all 28 grid cells sit inside their bands"
    else:
        c, r, banded, low, high = worst_cell
        detail = (
            f"worst band violation {worst:.3e} at (c, r) = ({c:g}, {r:g}): "
            f"value {banded:.9g} against [{low:.9g}, {high:.9g}]"
        )
    return CheckReport(
        "modulus-mean-bands", worst, 0.0, tol, passed, detail)


def gamma_identities(tol):
    """Gamma-function identities used throughout the bounds.

    The reflection identity Gamma(z) Gamma(1-z) sin(pi z) = pi must hold to
    1e-12 at ten non-integer points, and the two-endpoint singular integral
    int t^(a-1) (1-t)^(-a) dt must reproduce pi/sin(pi a) to 1e-8 for
    a in {0.3, 0.5, 0.7}."""
    points = (0.1, 0.25, 1.0 / 3.0, 0.4, 0.45, 0.6, 2.0 / 3.0, 0.75, 1.3, 2.6)
    worst_reflection = max(abs(reflection_residual(z)) for z in points)
    reflection_ok = worst_reflection < 1e-12

    worst_beta = 0.0
    for a in (0.3, 0.5, 0.7):
        def integrand(t, a=a):
            return np.exp((a - 1.0) * np.log(t) - a * np.log1p(-t))

        value = float(integrate_singular(
            integrand, 0.0, 1.0, SingularitySpec(a - 1.0, -a), 1e-10).value)
        worst_beta = max(worst_beta, abs(value - math.pi / math.sin(math.pi * a)))
    beta_ok = worst_beta <= 1e-8

    passed = reflection_ok and beta_ok
    detail = (
        f"reflection identity residual {worst_reflection:.2e} over ten "
        f"points; two-endpoint singular integral matches pi/sin(pi a) to "
        f"{worst_beta:.2e}"
    )
    return CheckReport(
        "gamma-identities", worst_beta, 0.0, 1e-8, passed, detail)


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

def run_all(tol=1e-8, truncation=DEFAULT_TRUNCATION, seed=1729,
            alpha_grid=DEFAULT_ALPHA_GRID):
    """Run the default verification suite in its canonical order.

    Numerical non-convergence inside a check is captured as a failed
    CheckReport rather than an exception, so the suite always returns one
    report per registered check."""
    checks = (
        ("bloch-A-constant", lambda: compute_A(tol)),
        ("bloch-B-constant", lambda: compute_B(tol)),
        ("bloch-to-blochlog-norm", lambda: norm_bloch_to_blochlog(tol)),
        ("alpha-lower-bound-1.5", lambda: alpha_lower_bound(1.5, tol)),
        ("alpha-upper-bound-1.5", lambda: alpha_upper_bound(1.5)),
        ("alpha-bounds-order", lambda: alpha_bounds_order(alpha_grid)),
        ("alpha-unbounded-0.5", lambda: alpha_unboundedness_witness(0.5)),
        ("alpha-unbounded-2", lambda: alpha_unboundedness_witness(2.0)),
        ("alpha-unbounded-2.5", lambda: alpha_unboundedness_witness(2.5)),
        ("h1-upper-internals", lambda: h1_upper_bound_internals(tol, seed)),
        ("h1-lower-bound-0.5", lambda: h1_lower_bound(0.5, tol)),
        ("h1-lower-bound-0.99", lambda: h1_lower_bound(0.99, tol)),
        ("hinf-norm", lambda: hinf_norm(tol)),
        ("series-integral-agreement",
         lambda: representation_agreement(tol, truncation, seed)),
        ("modulus-mean-bands", lambda: modulus_mean_bands(tol)),
        ("gamma-identities", lambda: gamma_identities(tol)),
    )
    reports = []
    for name, thunk in checks:
        try:
            report = thunk()
        except (QuadratureError, DivergenceError) as exc:
            report = CheckReport(
                name, math.nan, math.nan, tol, False,
                f"numerical non-convergence: {exc}")
        reports.append(report)
    return reports
