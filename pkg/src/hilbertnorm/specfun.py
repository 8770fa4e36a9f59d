"""Real special functions and the logarithmic weight.

Gamma and Beta are thin, validated wrappers over the C library routines
exposed by ``math``; those are correctly rounded to well under the 1e-12
relative-error contract on [0.1, 50] (checked against 30-digit references in
the test suite). Beta goes through log-gamma sums so values near the domain
edges neither overflow nor lose digits to naive products.
"""

import math

import numpy as np

__all__ = ["log_weight", "gamma", "beta", "reflection_residual"]


def log_weight(r):
    """Logarithmic weight 1 - 2*log(1-r) = log(e/(1-r)^2) for r in [0, 1).

    Accepts a float or ndarray; strictly increasing, equal to 1 at r = 0.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0) or np.any(r >= 1.0):
        raise ValueError("log_weight requires 0 <= r < 1")
    out = 1.0 - 2.0 * np.log1p(-r)
    return float(out) if out.ndim == 0 else out


def gamma(x):
    """Gamma function for real x, excluding the poles at 0, -1, -2, ..."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("gamma requires finite x")
    if x <= 0.0 and x == math.floor(x):
        raise ValueError(f"gamma pole at x = {x:g}")
    return math.gamma(x)


def beta(s, t):
    """Beta function Gamma(s)Gamma(t)/Gamma(s+t) for s, t > 0, in log space.

    The evaluation path is symmetric in (s, t): exp(lgamma(s) + lgamma(t)
    - lgamma(s+t)), and float addition commutes, so beta(s, t) == beta(t, s)
    exactly as computed.
    """
    s = float(s)
    t = float(t)
    if not (s > 0.0 and t > 0.0):
        raise ValueError("beta requires s > 0 and t > 0")
    return math.exp(math.lgamma(s) + math.lgamma(t) - math.lgamma(s + t))


def _sinpi(x):
    """sin(pi*x) with range reduction, exact at integers and half-integers."""
    x = math.fmod(x, 2.0)
    if x < 0.0:
        x += 2.0
    if x < 0.5:
        return math.sin(math.pi * x)
    if x < 1.5:
        return math.sin(math.pi * (1.0 - x))
    return math.sin(math.pi * (x - 2.0))


def reflection_residual(z):
    """Relative residual of gamma(z)*gamma(1-z) = pi/sin(pi*z), z non-integer.

    Self-test quantity: |gamma(z)gamma(1-z) - pi/sin(pi z)| / (pi/|sin(pi z)|).
    """
    z = float(z)
    if z == math.floor(z):
        raise ValueError("reflection residual undefined at integers")
    s = _sinpi(z)
    product = gamma(z) * gamma(1.0 - z)
    reference = math.pi / s
    return abs(product - reference) / (math.pi / abs(s))
