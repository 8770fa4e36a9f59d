"""Norm functionals on the unit disk.

Six families: the integral-mean norms H^p and their logarithmically weighted
variants H^p_log, and the alpha-Bloch seminorms/norms B^alpha and B^alpha_log,
together with the circular power means I_c and the two sides of the
coefficient inequality sum |a_n|/(n+1) <= pi * ||f||_{H^1}.

Every norm is a supremum over the radius, delegated to the sup-search module;
the objective at fixed radius is a circle mean (or a closed-form radial
expression when the input certifies nonnegative power-series coefficients,
which makes |f(z)| <= f(|z|) along every circle). Unbounded functionals
surface as the sup-search divergence signal rather than a value.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .catalog import (Kind, TestFunction, CoefficientSeries, eval as cat_eval,
                      eval_series, derivative_series)
from .quadrature import circle_mean, integrate
from .specfun import log_weight
from .supsearch import SupResult, supremum_unit, AT_ZERO

__all__ = [
    "SpaceSpec",
    "hardy_norm",
    "hardy_norm_details",
    "bloch_seminorm",
    "bloch_seminorm_details",
    "bloch_norm",
    "i_c",
    "hardy_inequality_gap",
]


@dataclass(frozen=True)
class SpaceSpec:
    """A function space symbol: Hardy(p) or Bloch(alpha), optionally with the
    logarithmic weight."""
    family: str
    p: Optional[float] = None
    alpha: Optional[float] = None
    log_weighted: bool = False

    def __post_init__(self):
        if self.family == "Hardy":
            if self.p is None or (self.p != math.inf and not self.p >= 1.0):
                raise ValueError("Hardy space requires p >= 1 or p = inf")
            if self.alpha is not None:
                raise ValueError("Hardy space takes no alpha")
        elif self.family == "Bloch":
            if self.alpha is None or not self.alpha > 0.0:
                raise ValueError("Bloch space requires alpha > 0")
            if self.p is not None:
                raise ValueError("Bloch space takes no p")
        else:
            raise ValueError(f"unknown family {self.family!r}")


def _validate_p(p):
    if p != math.inf and not p >= 1.0:
        raise ValueError("p must satisfy p >= 1 or p = inf")
    return float(p)


def _weight_at(r, log_weighted):
    return float(log_weight(r)) if log_weighted else 1.0


def _mean_objective(f, p, log_weighted, inner_tol):
    """Radius -> M_p(r, f) / weight(r), choosing the cheapest sound route."""
    if isinstance(f, TestFunction):
        if p == math.inf:
            # nonnegative coefficients: circle max sits on the positive axis
            def mean(r):
                return abs(cat_eval(f, r))
        elif f.kind is Kind.CONSTANT:
            def mean(r):
                return 1.0
        elif f.kind is Kind.HARDY_ALPHA_EXTREMAL:
            c = p * f.param - 1.0

            def mean(r):
                return i_c(c, r, inner_tol) ** (1.0 / p)
        else:
            def mean(r):
                return circle_mean(lambda z: cat_eval(f, z), r, p, inner_tol)
    elif isinstance(f, CoefficientSeries):
        def mean(r):
            return circle_mean(lambda z: eval_series(f, z), r, p, inner_tol)
    else:
        raise TypeError("expected a TestFunction or CoefficientSeries")

    if not log_weighted:
        return mean
    return lambda r: mean(r) / _weight_at(r, True)


def hardy_norm_details(f, p, log_weighted, tol):
    """Full search result for sup_r M_p(r, f)/weight(r)."""
    p = _validate_p(p)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    inner_tol = max(0.1 * tol, 1e-13)
    objective = _mean_objective(f, p, log_weighted, inner_tol)
    return supremum_unit(objective, tol)


def hardy_norm(f, p, log_weighted, tol):
    """sup over 0 <= r < 1 of the p-th integral mean of f on the circle of
    radius r, divided by 1 - 2 log(1-r) in the log-weighted variant."""
    return hardy_norm_details(f, p, log_weighted, tol).value


def _bloch_radial_objective(f, alpha, log_weighted):
    """Radius -> (1-r^2)^alpha |f'(r)| / weight(r) in closed form for catalog
    functions (all of which have nonnegative derivative coefficients)."""
    if f.kind is Kind.HALF_LOG:
        # f'(z) = 1/(1-z^2)
        def deriv(r, om2):
            return 1.0 / om2
    elif f.kind is Kind.HARDY_ALPHA_EXTREMAL:
        a = f.param

        # f'(z) = a (1-z)^{-a-1}
        def deriv(r, om2):
            return a * (1.0 - r) ** (-a - 1.0)
    else:
        af = f.param

        # f'(z) = z (1-z^2)^{-af}
        def deriv(r, om2):
            return r * om2 ** (-af)

    def objective(r):
        om2 = (1.0 - r) * (1.0 + r)
        return om2 ** alpha * deriv(r, om2) / _weight_at(r, log_weighted)

    return objective


def _series_radial_objective(d, alpha, log_weighted):
    def objective(r):
        om2 = (1.0 - r) * (1.0 + r)
        return om2 ** alpha * abs(eval_series(d, r)) / _weight_at(r, log_weighted)
    return objective


def bloch_seminorm_details(f, alpha, log_weighted, tol):
    """Full search result for sup over the disk of (1-|z|^2)^alpha |f'(z)| /
    weight(|z|)."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise ValueError("alpha must be positive")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    if isinstance(f, TestFunction):
        if f.kind is Kind.CONSTANT:
            return SupResult(0.0, 0.0, AT_ZERO, 0.0)
        return supremum_unit(_bloch_radial_objective(f, alpha, log_weighted), tol)

    if not isinstance(f, CoefficientSeries):
        raise TypeError("expected a TestFunction or CoefficientSeries")

    d = derivative_series(f)
    if d.coeffs.size == 0:
        return SupResult(0.0, 0.0, AT_ZERO, 0.0)

    certified = bool(np.all(d.coeffs.imag == 0.0) and np.all(d.coeffs.real >= 0.0))
    if certified:
        return supremum_unit(_series_radial_objective(d, alpha, log_weighted), tol)

    # No radial certificate: scan a coarse polar grid for the best ray, then
    # refine radially along it. The returned value still dominates every
    # point evaluated anywhere on the grid.
    thetas = 2.0 * np.pi * np.arange(64) / 64.0
    xs = np.linspace(0.0, 40.0, 128)
    rs = np.minimum(-np.expm1(-xs), np.nextafter(1.0, 0.0))
    z = rs[:, None] * np.exp(1j * thetas[None, :])
    mod = np.abs(np.polynomial.polynomial.polyval(z, d.coeffs))
    om2 = ((1.0 - rs) * (1.0 + rs)) ** alpha
    w = log_weight(rs) if log_weighted else np.ones_like(rs)
    grid_vals = mod * (om2 / w)[:, None]
    i_r, i_th = np.unravel_index(int(np.argmax(grid_vals)), grid_vals.shape)
    coarse_best = float(grid_vals[i_r, i_th])
    ray = np.exp(1j * thetas[i_th])

    def objective(r):
        om2 = (1.0 - r) * (1.0 + r)
        return om2 ** alpha * abs(eval_series(d, r * ray)) / _weight_at(r, log_weighted)

    refined = supremum_unit(objective, tol)
    if refined.value >= coarse_best:
        return refined
    return SupResult(coarse_best, float(rs[i_r]), refined.boundary,
                     refined.error_estimate)


def bloch_seminorm(f, alpha, log_weighted, tol):
    """sup over the disk of (1-|z|^2)^alpha |f'(z)|, divided by the log
    weight at |z| in the weighted variant."""
    return bloch_seminorm_details(f, alpha, log_weighted, tol).value


def bloch_norm(f, alpha, log_weighted, tol):
    """|f(0)| + the alpha-Bloch seminorm."""
    if isinstance(f, TestFunction):
        at_zero = abs(cat_eval(f, 0.0))
    elif isinstance(f, CoefficientSeries):
        at_zero = abs(complex(f.coeffs[0])) if f.coeffs.size else 0.0
    else:
        raise TypeError("expected a TestFunction or CoefficientSeries")
    return at_zero + bloch_seminorm(f, alpha, log_weighted, tol)


def i_c(c, r, tol):
    """Circular mean of |1 - r e^{i theta}|^{-(1+c)}.

    The modulus is built from |1 - re^{i theta}|^2 = (1-r)^2 +
    4 r sin^2(theta/2), which stays fully accurate when r is within a few
    ulps of 1 (forming the circle point itself would not)."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise ValueError("i_c requires 0 <= r < 1")
    if r == 0.0:
        return 1.0
    expo = -0.5 * (1.0 + float(c))
    omr2 = (1.0 - r) ** 2

    def integrand(theta):
        s = np.sin(0.5 * theta)
        return (omr2 + 4.0 * r * s * s) ** expo

    res = integrate(integrand, 0.0, math.pi, tol)
    return float(np.real(res.value)) / math.pi


def hardy_inequality_gap(s, tol):
    """The two sides of the coefficient inequality for an H^1 function:
    (sum_{n<N} |a_n|/(n+1), pi * ||s||_{H^1}). The first component can never
    exceed the second."""
    if not isinstance(s, CoefficientSeries):
        raise TypeError("expected a CoefficientSeries")
    n = np.arange(s.coeffs.size, dtype=float)
    lhs = float(np.sum(np.abs(s.coeffs) / (n + 1.0))) if s.coeffs.size else 0.0
    rhs = math.pi * hardy_norm(s, 1.0, False, tol)
    return lhs, rhs
