"""One-dimensional supremum search over [0, 1) and [0, infinity).

The unit-interval search reparameterizes by x = -log(1-r) so that a uniform
x-grid packs points geometrically toward the boundary, then refines the best
bracket by golden section. Removable singularities at the domain edges are
the caller's job: pass the limit value and the searcher uses it verbatim; it
never extrapolates to points it did not evaluate. Ties break toward the
smallest argument. Objectives that blow up along the boundary raise a
divergence signal carrying the witness values.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SupResult",
    "DivergenceError",
    "INTERIOR",
    "AT_ZERO",
    "AT_BOUNDARY_LIMIT",
    "supremum_unit",
    "supremum_halfline",
]

INTERIOR = "Interior"
AT_ZERO = "AtZero"
AT_BOUNDARY_LIMIT = "AtBoundaryLimit"

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SupResult:
    """value: the supremum found (>= every evaluated objective value);
    arg: maximizer in original coordinates, the last grid point for a
    boundary limit, or 0 for a supremum at the left edge;
    boundary: one of Interior, AtZero, AtBoundaryLimit;
    error_estimate: conservative accuracy indicator for value."""
    value: float
    arg: float
    boundary: str
    error_estimate: float


class DivergenceError(Exception):
    """Objective grows without bound along the boundary grid. Carries the
    witness (arg, value) pairs over the final decade."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or []


def _golden_max(fun, lo, hi, value_tol, max_iter=160):
    """Golden-section maximization on [lo, hi]; returns (x_best, f_best)."""
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc = fun(c)
    fd = fun(d)
    for _ in range(max_iter):
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = fun(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = fun(d)
        if hi - lo <= 1e-12 * max(1.0, abs(c)) or abs(fc - fd) <= 0.01 * value_tol:
            break
    if fc >= fd:
        return c, fc
    return d, fd


def _check_divergence(xs, vals, x_span_tail):
    """Raise DivergenceError if the tail grows by a factor > 10 over the
    final decade (x-distance log(10) of boundary approach) and is monotone."""
    x_last = xs[-1]
    # pick the comparison point at least a full decade back
    idx = int(np.searchsorted(xs, x_last - x_span_tail, side="right")) - 1
    idx = min(max(idx, 0), len(xs) - 2)
    tail = vals[idx:]
    if vals[-1] > 0 and np.all(np.diff(tail) > 0) and vals[-1] > 10.0 * max(vals[idx], 1e-300):
        witness = list(zip(xs[idx:].tolist(), tail.tolist()))
        raise DivergenceError(
            f"objective grows by factor {vals[-1] / max(vals[idx], 1e-300):.3g} "
            "over the final decade of boundary approach",
            witness=witness)


def _evaluate_grid(g, args, limit_at_zero):
    vals = np.empty(len(args))
    for i, r in enumerate(args):
        if i == 0 and limit_at_zero is not None:
            vals[i] = float(limit_at_zero)
        else:
            v = float(g(float(r)))
            if not math.isfinite(v):
                raise ValueError(f"objective not finite at {r!r}")
            vals[i] = v
    return vals


def unit_grid(n_grid=512, x_max=40.0):
    """Canonical evaluation radii for unit-interval suprema: r = 1 - e^{-x}
    for x uniform on [0, x_max], saturated at the largest double below 1 and
    deduplicated there.  Returns (xs, rs)."""
    xs = np.linspace(0.0, x_max, n_grid)
    rs = -np.expm1(-xs)
    rs = np.minimum(rs, np.nextafter(1.0, 0.0))
    keep = np.concatenate([[True], rs[1:] > rs[:-1]])
    return xs[keep], rs[keep]


def halfline_grid(n_grid=512, x_max=60.0):
    """Canonical evaluation abscissae for half-line suprema: a uniform grid
    on [0, 10] extended by a log-spaced tail to x_max."""
    n_lin = max(n_grid - 128, 16)
    return np.concatenate([np.linspace(0.0, 10.0, n_lin),
                           np.geomspace(10.0, x_max, 129)[1:]])


def supremum_unit(g, tol, limit_at_zero=None, n_grid=512, x_max=40.0):
    """Supremum of g over r in [0, 1).

    Evaluates g on r = 1 - e^{-x} for x uniform on [0, x_max] (the grid
    saturates at the largest double below 1 and is deduplicated there),
    golden-refines the winning bracket in x, and classifies the maximizer.
    limit_at_zero, when given, replaces the r = 0 evaluation.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    xs, rs = unit_grid(n_grid, x_max)

    vals = _evaluate_grid(g, rs, limit_at_zero)
    _check_divergence(xs, vals, math.log(10.0))

    vmax = float(np.max(vals))
    tie_tol = max(tol, 4.0 * np.finfo(float).eps) * max(1.0, abs(vmax))
    attains = np.nonzero(vals >= vmax - tie_tol)[0]
    ibest = int(attains[0])
    last = len(rs) - 1

    def g_of_x(x):
        r = min(-math.expm1(-x), np.nextafter(1.0, 0.0))
        if r == 0.0 and limit_at_zero is not None:
            return float(limit_at_zero)
        return float(g(r))

    # A tie band that reaches the last radius with a still strictly
    # increasing tail is a boundary-limit supremum (the increments merely
    # dropped below the tie tolerance); plateaus keep first-index ties.
    if (ibest != last and int(attains[-1]) == last and ibest != 0
            and np.all(np.diff(vals[-3:]) > 0)):
        return SupResult(
            value=vmax,
            arg=float(rs[-1]),
            boundary=AT_BOUNDARY_LIMIT,
            error_estimate=float(abs(vals[-1] - vals[-2])),
        )

    if ibest == last:
        if np.all(np.diff(vals[-3:]) > 0):
            return SupResult(
                value=vmax,
                arg=float(rs[-1]),
                boundary=AT_BOUNDARY_LIMIT,
                error_estimate=float(abs(vals[-1] - vals[-2])),
            )
        lo, hi = xs[-2], xs[-1]
        x_star, v_star = _golden_max(g_of_x, lo, hi, tol * max(1.0, vmax))
        value = max(vmax, v_star)
        return SupResult(value, float(-math.expm1(-x_star)), INTERIOR,
                         float(abs(value - vmax) + tol * max(1.0, value)))

    lo = xs[max(ibest - 1, 0)]
    hi = xs[min(ibest + 1, last)]
    x_star, v_star = _golden_max(g_of_x, lo, hi, tol * max(1.0, vmax))

    if ibest == 0 and v_star <= vals[0] + tie_tol:
        return SupResult(
            value=vmax,
            arg=0.0,
            boundary=AT_ZERO,
            error_estimate=float(abs(vals[0] - vals[1])) if len(vals) > 1 else 0.0,
        )
    value = max(vmax, v_star)
    arg = float(-math.expm1(-x_star)) if v_star >= vmax else float(rs[ibest])
    return SupResult(value, arg, INTERIOR,
                     float(abs(v_star - vmax) + tol * max(1.0, value)))


def supremum_halfline(g, tol, limit_at_zero=None, limit_at_infinity=None,
                      n_grid=512, x_max=60.0):
    """Supremum of g over x in [0, infinity).

    Uniform grid on [0, 10] plus a log-spaced tail to x_max; caller-supplied
    limits at 0 and infinity enter the comparison as ordinary candidates
    (ties break toward the smallest argument, with infinity largest)."""
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    xs = halfline_grid(n_grid, x_max)

    vals = _evaluate_grid(g, xs, limit_at_zero)
    _check_divergence(xs, vals, x_max - x_max / 10.0)

    vmax = float(np.max(vals))
    tie_tol = max(tol, 4.0 * np.finfo(float).eps) * max(1.0, abs(vmax))

    if limit_at_infinity is not None and float(limit_at_infinity) > vmax + tie_tol:
        return SupResult(
            value=float(limit_at_infinity),
            arg=math.inf,
            boundary=AT_BOUNDARY_LIMIT,
            error_estimate=float(abs(float(limit_at_infinity) - vals[-1])),
        )

    ibest = int(np.nonzero(vals >= vmax - tie_tol)[0][0])
    last = len(xs) - 1

    def g_of_x(x):
        if x == 0.0 and limit_at_zero is not None:
            return float(limit_at_zero)
        return float(g(float(x)))

    if ibest == last:
        if np.all(np.diff(vals[-3:]) > 0):
            return SupResult(vmax, float(xs[-1]), AT_BOUNDARY_LIMIT,
                             float(abs(vals[-1] - vals[-2])))
        lo, hi = xs[-2], xs[-1]
        x_star, v_star = _golden_max(g_of_x, lo, hi, tol * max(1.0, vmax))
        value = max(vmax, v_star)
        return SupResult(value, float(x_star), INTERIOR,
                         float(abs(value - vmax) + tol * max(1.0, value)))

    lo = xs[max(ibest - 1, 0)]
    hi = xs[min(ibest + 1, last)]
    x_star, v_star = _golden_max(g_of_x, lo, hi, tol * max(1.0, vmax))

    if ibest == 0 and v_star <= vals[0] + tie_tol:
        return SupResult(vmax, 0.0, AT_ZERO,
                         float(abs(vals[0] - vals[1])) if len(vals) > 1 else 0.0)
    value = max(vmax, v_star)
    arg = float(x_star) if v_star >= vmax else float(xs[ibest])
    return SupResult(value, arg, INTERIOR,
                     float(abs(v_star - vmax) + tol * max(1.0, value)))
