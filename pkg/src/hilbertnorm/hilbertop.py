"""The Hilbert matrix operator in its four equivalent forms.

Coefficient action:      (Hf)_n   = sum_k a_k / (n + k + 1)
Integral form:           Hf(z)    = int_0^1 f(t) / (1 - t z) dt
Derivative kernel:       (Hf)'(z) = int_0^1 t f(t) / (1 - t z)^2 dt
Path-shifted derivative: (Hf)'(z) = int_0^1 t f(phi_t(z)) / (d_t(z) (1 - z)) dt

where phi_t(z) = t / d_t(z), d_t(z) = 1 - (1 - t) z, and the weighted
composition family T_t f = w_t (f o phi_t) with w_t(z) = 1 / d_t(z)
decomposes the operator as Hf = int_0^1 T_t f dt.

Numerical form: every denominator is grouped so no catastrophic cancellation
occurs as t -> 1 or |z| -> 1, e.g. d_t(z) = (1 - z) + t z, and the composed
values 1 -+ phi_t(z) are produced as exact-ratio expressions rather than by
subtracting phi from 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from .catalog import Kind, TestFunction, CoefficientSeries, eval as cat_eval, \
    _expm1_complex
from .quadrature import SingularitySpec, integrate, integrate_singular

__all__ = [
    "CompositionSymbol",
    "apply_matrix",
    "apply_integral",
    "derivative_at",
    "derivative_at_pathshifted",
    "apply_T",
]

_MATRIX_CHUNK = 256


@dataclass(frozen=True)
class CompositionSymbol:
    """The disk automorphism-like symbol pair (w_t, phi_t) at parameter t."""
    t: float

    def __post_init__(self):
        if not 0.0 < self.t < 1.0:
            raise ValueError("CompositionSymbol requires 0 < t < 1")

    def weight(self, z):
        z = np.asarray(z, dtype=complex)
        out = 1.0 / ((1.0 - z) + self.t * z)
        return complex(out) if out.ndim == 0 else out

    def phi(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.t / ((1.0 - z) + self.t * z)
        return complex(out) if out.ndim == 0 else out


def apply_matrix(s, out_order):
    """Truncated matrix action b_n = sum_{k<N} a_k/(n+k+1), n < out_order.

    When the input series is exact (tail_bound == 0.0) the output carries the
    tail bound sum_k |a_k|/(out_order+k+1), valid for every output index
    >= out_order; otherwise the output tail is unknown."""
    out_order = int(out_order)
    if out_order < 1:
        raise ValueError("out_order must be >= 1")
    coeffs = s.coeffs
    # skipping zero coefficients (and the imaginary part of a real series)
    # leaves every surviving summand bit-identical
    work = coeffs if coeffs.imag.any() else coeffs.real
    ks = np.flatnonzero(work)
    vals = work[ks]
    if vals.size * out_order > (1 << 22):
        # The matrix is constant along antidiagonals, so its action is a
        # correlation against h_m = 1/(m+1); the FFT form costs
        # O((N + out) log) instead of O(N * out) and differs from the direct
        # sums only at the 1e-14 roundoff level.
        a = np.zeros(int(ks[-1]) + 1, dtype=work.dtype)
        a[ks] = vals
        h = 1.0 / np.arange(1.0, ks[-1] + out_order + 1.0)
        width = 1 << int(math.ceil(math.log2(a.size + h.size - 1)))
        if np.iscomplexobj(work):
            conv = np.fft.ifft(np.fft.fft(a[::-1], width) * np.fft.fft(h, width))
        else:
            conv = np.fft.irfft(
                np.fft.rfft(a[::-1], width) * np.fft.rfft(h, width), width)
        b = np.asarray(conv[a.size - 1:a.size - 1 + out_order], dtype=complex)
    else:
        n = np.arange(out_order, dtype=float)[:, None]
        kf = ks.astype(float)
        b = np.zeros(out_order, dtype=work.dtype)
        for j0 in range(0, vals.size, _MATRIX_CHUNK):
            j1 = min(j0 + _MATRIX_CHUNK, vals.size)
            b = b + np.sum(
                vals[None, j0:j1] / (n + kf[None, j0:j1] + 1.0), axis=1)
        b = b.astype(complex)
    if s.tail_bound == 0.0:
        k = np.arange(coeffs.size, dtype=float)
        tail = float(np.sum(np.abs(coeffs) / (out_order + k + 1.0)))
    else:
        tail = None
    return CoefficientSeries(b, out_order, tail)


def _endpoint_spec(fn):
    """Right-endpoint power behavior of the catalog integrands at t = 1, or a
    domain error where the operator integral diverges."""
    if fn.kind is Kind.CONSTANT:
        return None
    if fn.kind is Kind.HALF_LOG:
        # logarithmic blowup; -1/2 is a valid power majorant
        return SingularitySpec(right_exponent=-0.5)
    if fn.kind is Kind.HARDY_ALPHA_EXTREMAL:
        return SingularitySpec(right_exponent=-fn.param)
    al = fn.param
    if al >= 2.0:
        raise ValueError(
            f"operator integral diverges for this function (alpha = {al} >= 2)")
    if al > 1.0:
        return SingularitySpec(right_exponent=1.0 - al)
    return None


def _require_point(z):
    z = complex(z)
    if not abs(z) < 1.0:
        raise ValueError("evaluation point must satisfy |z| < 1")
    return z


def apply_integral(fn, z, tol):
    """Hf(z) = int_0^1 f(t)/(1-tz) dt for a catalog function."""
    z = _require_point(z)
    omz = 1.0 - z
    spec = _endpoint_spec(fn)

    def integrand(t):
        return cat_eval(fn, t) / (omz + z * (1.0 - t))

    if spec is None:
        res = integrate(integrand, 0.0, 1.0, tol)
    else:
        res = integrate_singular(integrand, 0.0, 1.0, spec, tol)
    return complex(res.value)


def derivative_at(fn, z, tol):
    """(Hf)'(z) = int_0^1 t f(t)/(1-tz)^2 dt for a catalog function."""
    z = _require_point(z)
    omz = 1.0 - z
    spec = _endpoint_spec(fn)

    def integrand(t):
        d = omz + z * (1.0 - t)
        return t * cat_eval(fn, t) / (d * d)

    if spec is None:
        res = integrate(integrand, 0.0, 1.0, tol)
    else:
        res = integrate_singular(integrand, 0.0, 1.0, spec, tol)
    return complex(res.value)


def derivative_at_pathshifted(fn, z, tol):
    """(Hf)'(z) through the shifted path: int_0^1 t f(phi_t(z)) /
    (d_t(z) (1-z)) dt.

    The composed argument phi_t(z) approaches 1 as t -> 1, so f(phi_t(z)) is
    expanded per kind through the exact ratios

        1 - phi_t(z) = (1-t)(1-z) / d_t(z)
        1 + phi_t(z) = ((1-z) + t(1+z)) / d_t(z)

    both of which lie in the right half-plane for |z| < 1; their logarithms
    therefore combine without branch jumps, and the t -> 1 singularity enters
    only through the explicit (1-t) factor that the singular quadrature
    transform neutralizes exactly."""
    z = _require_point(z)
    omz = 1.0 - z
    spec = _endpoint_spec(fn)
    kind = fn.kind
    al = fn.param

    def integrand(t):
        d = omz + t * z
        base = t / (d * omz)
        if kind is Kind.CONSTANT:
            return base + 0.0j
        w1 = (1.0 - t) * omz / d
        if kind is Kind.HARDY_ALPHA_EXTREMAL:
            return base * np.exp(-al * np.log(w1.astype(complex)))
        w2 = (omz + t * (1.0 + z)) / d
        if kind is Kind.HALF_LOG:
            return base * 0.5 * (np.log(w2.astype(complex)) - np.log(w1.astype(complex)))
        w = (1.0 - al) * (np.log(w1.astype(complex)) + np.log(w2.astype(complex)))
        return base * _expm1_complex(w) / (2.0 * (al - 1.0))

    if spec is None:
        res = integrate(integrand, 0.0, 1.0, tol)
    else:
        res = integrate_singular(integrand, 0.0, 1.0, spec, tol)
    return complex(res.value)


def apply_T(fn, t, z):
    """One member of the weighted composition family: (T_t f)(z) =
    w_t(z) f(phi_t(z))."""
    sym = CompositionSymbol(float(t))
    z = _require_point(z)
    w = sym.weight(z)
    return complex(w * cat_eval(fn, sym.phi(z)))
