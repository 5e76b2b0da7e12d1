"""Complex Gamma function (Lanczos, g=7, n=9) with reflection.

Values are assembled in log space when |Im z| is large, so results that
are below the binary64 range underflow to 0 instead of turning into nan.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import NumericRangeError, ValidationError

_G = 7.0
_P = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)
_LOG_PI = math.log(math.pi)

# beyond this the shift product and sin(pi z) are combined as logarithms
_LOG_FORM_IM = 30.0

SUPPORTED_IM = 1.0e3
SUPPORTED_RE = (-5.0, 10.0)


def _lanczos_log(z):
    """log Gamma(z) for Re z >= 1/2, on the principal-ish branch."""
    x = z - 1.0
    a = np.full_like(x, _P[0])
    for k in range(1, len(_P)):
        a = a + _P[k] / (x + k)
    w = x + _G + 0.5
    return _HALF_LOG_2PI + (x + 0.5) * np.log(w) - w + np.log(a)


def _shift(z):
    """Split z = z0 + m with Re z0 in [1/2, 3/2); return z0, the product
    z0 (z0+1) ... (z0+m-1) and the sum of its logarithms."""
    m = np.maximum(np.floor(z.real - 0.5).astype(int), 0)
    z0 = z - m
    prod = np.ones_like(z)
    logs = np.zeros_like(z)
    for j in range(int(m.max()) if m.size else 0):
        sel = j < m
        term = z0 + j
        prod = np.where(sel, prod * term, prod)
        logs = np.where(sel, logs + np.log(term), logs)
    return z0, prod, logs


def _log_gamma_right(z):
    """log Gamma(z) for Re z >= 1/2."""
    z0, _, logs = _shift(z)
    return _lanczos_log(z0) + logs


def _gamma_right_direct(z):
    """Gamma(z) for Re z >= 1/2 and moderate |Im z|, without a final exp of a
    large logarithm (keeps Gamma(n) accurate to a few ulp)."""
    z0, prod, _ = _shift(z)
    return np.exp(_lanczos_log(z0)) * prod


def _log_sin_pi(z):
    """log sin(pi z), stable for large |Im z|."""
    # for Im z >= 0: sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
    flip = z.imag < 0
    zz = np.where(flip, np.conj(z), z)
    val = np.log(0.5j) - 1j * np.pi * zz + np.log1p(-np.exp(2j * np.pi * zz))
    return np.where(flip, np.conj(val), val)


def log_gamma(z):
    """log Gamma(z), any branch; exp(log_gamma(z)) == Gamma(z)."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    re = z.real
    if np.any((z.imag == 0) & (re <= 0) & (re == np.round(re))):
        raise NumericRangeError("Gamma has a pole at non-positive integers")
    left = re < 0.5
    out = np.empty_like(z)
    if np.any(~left):
        out[~left] = _log_gamma_right(z[~left])
    if np.any(left):
        zl = z[left]
        out[left] = _LOG_PI - _log_sin_pi(zl) - _log_gamma_right(1.0 - zl)
    return out[0] if scalar else out


def complex_gamma(z):
    """Gamma(z) for complex scalar or array input."""
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    with np.errstate(under="ignore", over="ignore", invalid="ignore"):
        val = np.exp(log_gamma(z))
        small = np.abs(z.imag) <= _LOG_FORM_IM
        right = small & (z.real >= 0.5)
        if np.any(right):
            val[right] = _gamma_right_direct(z[right])
        left = small & (z.real < 0.5)
        if np.any(left):
            zl = z[left]
            val[left] = np.pi / (np.sin(np.pi * zl) * _gamma_right_direct(1.0 - zl))
    return complex(val[0]) if scalar else val


def stirling_check(x_grid, t_grid) -> float:
    """max |Gamma(x+it)| e^{|t|} (x+|t|) over the grid (an implied constant)."""
    x = np.asarray(list(x_grid), dtype=float)
    t = np.asarray(list(t_grid), dtype=float)
    if x.size == 0 or t.size == 0:
        raise ValidationError("empty grid")
    if np.any((x <= 0) | (x > 1)):
        raise ValidationError("x grid must lie in (0, 1]")
    if np.any(np.abs(t) < 1) or np.any(np.abs(t) > SUPPORTED_IM):
        raise ValidationError(f"t grid must satisfy 1 <= |t| <= {SUPPORTED_IM:g}")
    X, Tt = np.meshgrid(x, t, indexing="ij")
    lg = log_gamma(X + 1j * Tt)
    # combine in log space; |Gamma| e^{|t|} stays O(1) even where |Gamma| underflows
    vals = np.exp(lg.real + np.abs(Tt)) * (X + np.abs(Tt))
    return float(vals.max())
