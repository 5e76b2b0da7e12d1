"""Riemann zeta by Euler-Maclaurin summation in binary64.

    zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
              + sum_{k=1}^{K} B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}

with N = max(20, ceil(em_terms * (1 + |t|))).

Two evaluation paths share the tail formula:

* :func:`zeta` -- arbitrary points, each with its own N.
* :func:`line_moments` -- a uniform grid t0 + j*dt on one vertical line.
  Rows are processed in blocks; within a block the Dirichlet terms are
  ``n^{-(sigma + i t_b)} * exp(-i j dt log n)`` with the second factor
  shared by all blocks, and every row in a block uses the block's largest
  N.  The path also returns Taylor moments
  ``sum_{n<N} n^{-s} (-log n)^k / k!`` used by the disk scanner.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import bernoulli

from ..errors import NumericRangeError, ValidationError

T_MAX = 1.0e6
N_MIN = 20
# memory budget (complex entries) for one block of Dirichlet terms
_BLOCK_BUDGET = 1 << 21


@dataclass(frozen=True)
class EvalConfig:
    em_terms: float = 1.3          # multiplier in N = ceil(em_terms * (1 + |t|))
    em_corrections: int = 10       # Bernoulli correction count K
    tail_cutoff: float = 1e-18     # zeta_H truncation: stop once e^{-n/H} < cutoff
    quad_step: float = 0.02        # Perron line-integral step
    quad_tmax_floor: float = 40.0  # minimum half-width of the Perron window
    threads: int = 1

    def __post_init__(self):
        for name in ("em_terms", "tail_cutoff", "quad_step", "quad_tmax_floor"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"EvalConfig.{name} must be positive")
        if not 1 <= self.em_corrections <= 20:
            raise ValidationError("em_corrections must be in [1, 20]")
        if self.threads < 1:
            raise ValidationError("threads must be >= 1")
        if self.tail_cutoff >= 1:
            raise ValidationError("tail_cutoff must be < 1")


DEFAULT = EvalConfig()


@lru_cache(maxsize=None)
def _em_coefficients(K: int) -> np.ndarray:
    """B_2k / (2k)! for k = 1..K."""
    b = bernoulli(2 * K)
    return np.array([b[2 * k] / math.factorial(2 * k) for k in range(1, K + 1)])


@lru_cache(maxsize=8)
def _log_n(N: int) -> np.ndarray:
    return np.log(np.arange(1, N + 1, dtype=float))


def truncation(t, cfg: EvalConfig = DEFAULT):
    """N for ordinate(s) t."""
    t = np.abs(np.asarray(t, dtype=float))
    return np.maximum(N_MIN, np.ceil(cfg.em_terms * (1.0 + t))).astype(np.int64)


def _check_points(s: np.ndarray):
    if not np.all(np.isfinite(s)):
        raise ValidationError("non-finite evaluation point")
    if np.any(np.abs(s.imag) > T_MAX):
        raise NumericRangeError(f"|t| exceeds supported range {T_MAX:g}")
    if np.any(s == 1):
        raise NumericRangeError("zeta has a pole at s = 1")


def em_tail(s, N, K: int):
    """Euler-Maclaurin terms beyond the partial sum sum_{n<N} n^-s."""
    s = np.asarray(s, dtype=complex)
    N = np.asarray(N, dtype=float)
    logN = np.log(N)
    n_s = np.exp(-s * logN)  # N^-s
    out = N * n_s / (s - 1.0) + 0.5 * n_s
    coef = _em_coefficients(K)
    term = s * n_s / N          # s N^{-s-1}
    inv_n2 = 1.0 / (N * N)
    for k in range(1, K + 1):
        out = out + coef[k - 1] * term
        term = term * (s + 2 * k - 1) * (s + 2 * k) * inv_n2
    return out


def zeta(s, cfg: EvalConfig = DEFAULT):
    """zeta(s) for a complex scalar or array; every point uses its own N."""
    s_arr = np.asarray(s, dtype=complex)
    scalar = s_arr.ndim == 0
    s_flat = np.atleast_1d(s_arr).ravel()
    _check_points(s_flat)
    N = truncation(s_flat.imag, cfg)
    out = np.empty_like(s_flat)
    order = np.argsort(N, kind="stable")
    # group points of equal N so every row sum has the same length
    uniq, starts = np.unique(N[order], return_index=True)
    bounds = list(starts) + [len(order)]
    for i, n_val in enumerate(uniq):
        idx = order[bounds[i]:bounds[i + 1]]
        ln = _log_n(int(n_val))[: int(n_val) - 1]
        step = max(1, _BLOCK_BUDGET // max(1, len(ln)))
        for a in range(0, len(idx), step):
            sub = idx[a:a + step]
            terms = np.exp(-np.outer(s_flat[sub], ln))
            out[sub] = terms.sum(axis=1)
    out += em_tail(s_flat, N, cfg.em_corrections)
    out = out.reshape(np.shape(s_arr))
    return complex(out) if scalar else out


def _taylor_weights(N: int, K: int) -> np.ndarray:
    ln = _log_n(N)
    w = np.empty((N, K))
    w[:, 0] = 1.0
    for k in range(1, K):
        w[:, k] = w[:, k - 1] * (-ln) / k
    return w


def line_moments(sigma: float, t0: float, dt: float, M: int, K: int = 1,
                 cfg: EvalConfig = DEFAULT, coeffs: np.ndarray | None = None,
                 n_terms: int | None = None):
    """Dirichlet sums on the uniform grid t_j = t0 + j dt, j < M.

    Returns ``(moments, N_rows)`` where ``moments[j, k] =
    sum_{n<N_j} a_n n^{-(sigma + i t_j)} (-log n)^k / k!`` with ``a_n = 1``
    unless ``coeffs`` is given.  With ``n_terms`` every row sums n <= n_terms
    (used for finite series such as zeta_H); otherwise N_j is the
    Euler-Maclaurin truncation of the row's block.
    """
    if M <= 0:
        return np.zeros((0, K), complex), np.zeros(0, np.int64)
    t_all = t0 + dt * np.arange(M)
    if np.max(np.abs(t_all)) > T_MAX:
        raise NumericRangeError(f"|t| exceeds supported range {T_MAX:g}")
    if n_terms is None:
        n_hi = int(truncation(np.max(np.abs(t_all)), cfg))
    else:
        n_hi = int(n_terms) + 1
    B = int(max(1, min(256, _BLOCK_BUDGET // n_hi)))
    ln_all = _log_n(n_hi)[: n_hi - 1]
    E = np.exp(-1j * dt * np.outer(np.arange(B), ln_all))
    if K > 1:
        W_all = _taylor_weights(n_hi, K)[: n_hi - 1]
    amp_all = np.exp(-sigma * ln_all)
    if coeffs is not None:
        amp_all = amp_all * np.asarray(coeffs, dtype=float)[: n_hi - 1]

    moments = np.empty((M, K), complex)
    n_rows = np.empty(M, np.int64)

    def block(b0):
        b1 = min(M, b0 + B)
        if n_terms is None:
            tb = t_all[b0:b1]
            nb = int(truncation(np.max(np.abs(tb)), cfg))
        else:
            nb = n_hi
        ln = ln_all[: nb - 1]
        base = amp_all[: nb - 1] * np.exp(-1j * t_all[b0] * ln)
        V = E[: b1 - b0, : nb - 1] * base
        if K == 1:
            moments[b0:b1, 0] = V.sum(axis=1)
        else:
            moments[b0:b1] = V @ W_all[: nb - 1]
        n_rows[b0:b1] = nb

    starts = range(0, M, B)
    if cfg.threads > 1:
        with ThreadPoolExecutor(cfg.threads) as ex:
            list(ex.map(block, starts))
    else:
        for b0 in starts:
            block(b0)
    return moments, n_rows


def point_moments(sigma: float, t, K: int, cfg: EvalConfig = DEFAULT):
    """Taylor moments at sigma + i t for arbitrary ordinates; each point uses
    its own N.  Same layout as :func:`line_moments`."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(np.abs(t) > T_MAX):
        raise NumericRangeError(f"|t| exceeds supported range {T_MAX:g}")
    N = truncation(t, cfg)
    moments = np.empty((len(t), K), complex)
    order = np.argsort(N, kind="stable")
    uniq, starts = np.unique(N[order], return_index=True)
    bounds = list(starts) + [len(order)]
    for i, n_val in enumerate(uniq):
        n_val = int(n_val)
        idx = order[bounds[i]:bounds[i + 1]]
        ln = _log_n(n_val)[: n_val - 1]
        W = _taylor_weights(n_val, K)[: n_val - 1]
        step = max(1, _BLOCK_BUDGET // max(1, len(ln)))
        for a in range(0, len(idx), step):
            sub = idx[a:a + step]
            V = np.exp(-np.outer(sigma + 1j * t[sub], ln))
            moments[sub] = V @ W
    return moments, N


def zeta_line(sigma: float, t0: float, dt: float, M: int, cfg: EvalConfig = DEFAULT):
    """zeta(sigma + i t_j) on a uniform grid of M ordinates."""
    t = t0 + dt * np.arange(M)
    s = sigma + 1j * t
    _check_points(s)
    mom, n_rows = line_moments(sigma, t0, dt, M, 1, cfg)
    return mom[:, 0] + em_tail(s, n_rows, cfg.em_corrections)


def smoothed_terms(H: float, cfg: EvalConfig = DEFAULT) -> int:
    """Last index n of the zeta_H series: e^{-n/H} >= tail_cutoff."""
    if H < 1:
        raise ValidationError(f"H={H} must be >= 1")
    return int(math.floor(H * math.log(1.0 / cfg.tail_cutoff)))


def zeta_smoothed(s, H: float, cfg: EvalConfig = DEFAULT):
    """zeta_H(s) = sum_n n^-s e^{-n/H}, truncated where e^{-n/H} < tail_cutoff."""
    n_max = smoothed_terms(H, cfg)
    s_arr = np.asarray(s, dtype=complex)
    scalar = s_arr.ndim == 0
    s_flat = np.atleast_1d(s_arr).ravel()
    n = np.arange(1, n_max + 1, dtype=float)
    ln = np.log(n)
    w = np.exp(-n / H)
    out = np.empty_like(s_flat)
    step = max(1, _BLOCK_BUDGET // n_max)
    for a in range(0, len(s_flat), step):
        sub = s_flat[a:a + step]
        out[a:a + step] = (np.exp(-np.outer(sub, ln)) * w).sum(axis=1)
    out = out.reshape(np.shape(s_arr))
    return complex(out) if scalar else out


def zeta_smoothed_line(sigma: float, H: float, t0: float, dt: float, M: int,
                       cfg: EvalConfig = DEFAULT):
    """zeta_H(sigma + i t_j) on a uniform grid."""
    n_max = smoothed_terms(H, cfg)
    w = np.exp(-np.arange(1, n_max + 2, dtype=float) / H)
    mom, _ = line_moments(sigma, t0, dt, M, 1, cfg, coeffs=w, n_terms=n_max)
    return mom[:, 0]
