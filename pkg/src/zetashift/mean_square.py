"""Short-interval second moments of zeta and the two-sided Lemma-1 check.

Implied constants are reported as observed ratios; nothing here asserts a
specific constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError
from .quadrature import SimpsonResult, chunk_partials, even_intervals, refine_simpson
from .special.zeta import DEFAULT, EvalConfig, zeta, zeta_line, zeta_smoothed_line

MS_RTOL = 1e-3
MAX_HALVINGS = 8
DEFAULT_STEP = 0.05
MAJORANT_CUTOFF = 1e-18


@dataclass(frozen=True)
class Window:
    T: float
    H: float
    step: float = DEFAULT_STEP

    def __post_init__(self):
        if not self.T >= 3:
            raise ValidationError(f"window start T={self.T} must be >= 3")
        if not 1 <= self.H <= self.T:
            raise ValidationError(f"window length H={self.H} must satisfy 1 <= H <= T")
        if not 0 < self.step <= self.H / 10:
            raise ValidationError(f"step={self.step} must satisfy 0 < step <= H/10")


@dataclass
class MeanSquareResult:
    sigma: float
    window: Window
    value: float
    reference: float
    ratio: float
    refinement_delta: float
    reference_kind: str = "zeta(2 sigma)"
    partials: list = field(default_factory=list, repr=False)


def abs_zeta_sq_integral(sigma: float, a: float, b: float, step: float,
                         cfg: EvalConfig = DEFAULT, chunks: int = 1,
                         rtol: float = MS_RTOL) -> SimpsonResult:
    """int_a^b |zeta(sigma+it)|^2 dt by refined Simpson."""
    def f(t0, dt, M):
        return np.abs(zeta_line(sigma, t0, dt, M, cfg)) ** 2

    n0 = even_intervals(b - a, step, chunks)
    return refine_simpson(f, a, b, n0, rtol, MAX_HALVINGS)


def mean_square(sigma: float, w: Window, cfg: EvalConfig = DEFAULT,
                chunk_length: float | None = None) -> MeanSquareResult:
    """(1/H) int_T^{T+H} |zeta(sigma+it)|^2 dt with reference zeta(2 sigma).

    On the critical line the reference is log T and ``reference_kind`` says
    so.  ``chunk_length`` controls the per-subinterval partials kept for CSV
    export (default: about 20 chunks).
    """
    if not 0.5 <= sigma <= 1:
        raise ValidationError(f"sigma={sigma} outside [1/2, 1]")
    if chunk_length is None:
        chunks = max(1, min(20, int(w.H // max(w.step * 10, 1.0))))
    else:
        chunks = max(1, int(round(w.H / chunk_length)))
    res = abs_zeta_sq_integral(sigma, w.T, w.T + w.H, w.step, cfg, chunks)
    value = float(res.value) / w.H
    if sigma == 0.5:
        reference, kind = math.log(w.T), "log T"
    else:
        reference, kind = float(zeta(2 * sigma).real), "zeta(2 sigma)"
    partials = []
    cum = 0.0
    for lo, hi, part in chunk_partials(res, chunks):
        cum += float(part)
        partials.append((lo, hi, float(part), cum))
    return MeanSquareResult(sigma, w, value, reference, value / reference,
                            res.delta, kind, partials)


@dataclass
class Lemma1Result:
    sigma: float
    sigma0: float
    window: Window
    lhs: float
    critical_integral: float
    rhs_bound: float
    implied_constant: float


def lemma1_check(sigma: float, sigma0: float, w: Window,
                 cfg: EvalConfig = DEFAULT) -> Lemma1Result:
    """Both sides of
    int_T^{T+H} |zeta(sigma+it)|^2 << H + H^{2(sigma0-sigma)}/(sigma-sigma0)^2
                                       * int_{T-log T}^{T+H+log T} |zeta(sigma0+it)|^2.
    """
    if not 0.5 <= sigma0 < sigma <= 1:
        raise ValidationError(
            f"need 1/2 <= sigma0 < sigma <= 1, got sigma0={sigma0}, sigma={sigma}")
    lhs = float(abs_zeta_sq_integral(sigma, w.T, w.T + w.H, w.step, cfg).value)
    L = math.log(w.T)
    crit = float(abs_zeta_sq_integral(sigma0, w.T - L, w.T + w.H + L, w.step, cfg).value)
    rhs = w.H + w.H ** (2 * (sigma0 - sigma)) / (sigma - sigma0) ** 2 * crit
    return Lemma1Result(sigma, sigma0, w, lhs, crit, rhs, lhs / rhs)


# (sigma, sigma0, T, H): regression suite for the empirical Lemma-1 constant
LEMMA1_SUITE = (
    (0.75, 0.5, 1000.0, 100.0),
    (0.9, 0.6, 1000.0, 50.0),
    (0.6, 0.5, 1000.0, 100.0),
    (0.55, 0.5, 1000.0, 100.0),
    (1.0, 0.5, 1000.0, 100.0),
    (0.75, 0.5, 2000.0, 50.0),
    (0.75, 0.5, 3000.0, 10.0),
    (0.8, 0.7, 1500.0, 100.0),
    (0.65, 0.55, 2500.0, 80.0),
    (0.95, 0.9, 1200.0, 60.0),
    (0.7, 0.5, 500.0, 100.0),
    (0.7, 0.6, 800.0, 20.0),
    (0.6, 0.5, 100.0, 10.0),
    (0.9, 0.5, 4000.0, 100.0),
    (0.85, 0.75, 600.0, 40.0),
    (1.0, 0.75, 2000.0, 30.0),
    (0.75, 0.5, 1000.0, 1.0),
    (0.6, 0.55, 5000.0, 100.0),
    (0.99, 0.5, 300.0, 30.0),
    (0.8, 0.5, 10000.0, 100.0),
)


def lemma1_suite(cfg: EvalConfig = DEFAULT, step: float = DEFAULT_STEP) -> list[Lemma1Result]:
    out = []
    for sigma, sigma0, T, H in LEMMA1_SUITE:
        w = Window(T, H, min(step, H / 10))
        out.append(lemma1_check(sigma, sigma0, w, cfg))
    return out


@dataclass
class MajorantResult:
    sigma: float
    H: float
    T: float
    i1_estimate: float
    majorant: float
    constant: float


def mv_series(sigma: float, H: float) -> float:
    """H sum n^{-2 sigma} e^{-2n/H} + sum n^{1-2 sigma} e^{-2n/H}."""
    if H < 1:
        raise ValidationError(f"H={H} must be >= 1")
    if not 0.5 < sigma <= 1:
        raise ValidationError(f"sigma={sigma} outside (1/2, 1]")
    n_max = int(math.floor(H / 2 * math.log(1 / MAJORANT_CUTOFF)))
    n = np.arange(1, max(n_max, 1) + 1, dtype=float)
    damp = np.exp(-2 * n / H)
    return float(H * np.sum(n ** (-2 * sigma) * damp) + np.sum(n ** (1 - 2 * sigma) * damp))


def mv_majorant(sigma: float, H: float, T: float, cfg: EvalConfig = DEFAULT,
                step: float = DEFAULT_STEP) -> MajorantResult:
    """Compare I_1 = int_T^{T+H} |zeta_H(sigma+it)|^2 dt with its
    Montgomery-Vaughan majorant."""
    maj = mv_series(sigma, H)
    w = Window(T, H, min(step, H / 10))

    def f(t0, dt, M):
        return np.abs(zeta_smoothed_line(sigma, H, t0, dt, M, cfg)) ** 2

    res = refine_simpson(f, w.T, w.T + w.H, even_intervals(w.H, w.step), MS_RTOL,
                         MAX_HALVINGS)
    i1 = float(res.value)
    return MajorantResult(sigma, H, T, i1, maj, i1 / maj)
