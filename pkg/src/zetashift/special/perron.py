"""Numerical check of the smoothed-sum decomposition of zeta(s).

Shifting the Perron integral for zeta_H(s) to Re z = sigma0 - sigma gives

    zeta(s) = zeta_H(s) - Gamma(1-s) H^{1-s}
              - (1/2 pi i) int_{(sigma0 - sigma)} Gamma(z) zeta(s+z) H^z dz,

and with z = sigma0 - sigma + i tau the last term is
H^{sigma0-sigma} (1/2 pi) int Gamma(sigma0-sigma+i tau) zeta(sigma0+i(t+tau)) H^{i tau} d tau.
The integral is evaluated on |tau| <= max(log T, quad_tmax_floor); beyond
that the Gamma factor is below e^{-pi*40/2} and the tail is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from ..quadrature import even_intervals, refine_simpson
from .gamma import complex_gamma
from .zeta import DEFAULT, EvalConfig, zeta, zeta_line, zeta_smoothed

QUAD_RTOL = 1e-6


@dataclass(frozen=True)
class ComplexPoint:
    sigma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValidationError("ComplexPoint components must be finite")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass
class DecompositionReport:
    s: ComplexPoint
    H: float
    sigma0: float
    T: float
    lhs: complex
    rhs: complex
    residual: float
    zeta_H: complex
    residue_term: complex
    perron_integral: complex
    half_width: float
    quad_delta: float


def _as_point(s) -> ComplexPoint:
    if isinstance(s, ComplexPoint):
        return s
    s = complex(s)
    return ComplexPoint(s.real, s.imag)


def _validate(s: ComplexPoint, H: float, sigma0: float, T: float):
    if not 0.5 <= sigma0 < s.sigma <= 1:
        raise ValidationError(
            f"need 1/2 <= sigma0 < sigma <= 1, got sigma0={sigma0}, sigma={s.sigma}")
    if T < 3:
        raise ValidationError(f"T={T} must be >= 3")
    if H < 1:
        raise ValidationError(f"H={H} must be >= 1")


def _shifted_line_integral(s: ComplexPoint, H: float, sigma0: float, half_width: float,
                           cfg: EvalConfig, rtol: float = QUAD_RTOL):
    """(1/2 pi) int_{-w}^{w} Gamma(sigma0-sigma+i tau) zeta(sigma0+i(t+tau)) H^{i tau} d tau."""
    a = sigma0 - s.sigma
    logH = math.log(H)

    def integrand(t0, dt, M):
        tau = t0 + dt * np.arange(M)
        g = complex_gamma(a + 1j * tau)
        z = zeta_line(sigma0, s.t + t0, dt, M, cfg)
        return g * z * np.exp(1j * tau * logH)

    n0 = even_intervals(2 * half_width, cfg.quad_step)
    res = refine_simpson(integrand, -half_width, half_width, n0, rtol)
    return res.value / (2 * math.pi), res.delta


def perron_remainder(s, H: float, sigma0: float, T: float,
                     cfg: EvalConfig = DEFAULT) -> complex:
    """R_H(s): the shifted integral over |tau| <= log T (without H^{sigma0-sigma})."""
    s = _as_point(s)
    _validate(s, H, sigma0, T)
    val, _ = _shifted_line_integral(s, H, sigma0, math.log(T), cfg)
    return complex(val)


def decomposition_check(s, H: float, sigma0: float, T: float,
                        cfg: EvalConfig = DEFAULT) -> DecompositionReport:
    s = _as_point(s)
    _validate(s, H, sigma0, T)
    if abs(s.t) < 1:
        raise ValidationError("decomposition_check needs |t| >= 1")
    w = max(math.log(T), cfg.quad_tmax_floor)
    integral, delta = _shifted_line_integral(s, H, sigma0, w, cfg)
    perron = H ** (sigma0 - s.sigma) * integral
    zh = zeta_smoothed(s.s, H, cfg)
    residue = complex_gamma(1 - s.s) * np.exp((1 - s.s) * math.log(H))
    lhs = zeta(s.s, cfg)
    rhs = zh - residue - perron
    return DecompositionReport(
        s=s, H=H, sigma0=sigma0, T=T, lhs=complex(lhs), rhs=complex(rhs),
        residual=float(abs(lhs - rhs)), zeta_H=complex(zh),
        residue_term=complex(residue), perron_integral=complex(perron),
        half_width=w, quad_delta=float(delta))


def randomized_suite(seed: int, count: int = 10, sigma0: float = 0.5,
                     cfg: EvalConfig = DEFAULT) -> list[DecompositionReport]:
    """Decomposition residuals at random s, H with sigma in [0.6, 0.9],
    t in [50, 500], H in [10, 100]; T is taken equal to t."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        sigma = float(rng.uniform(0.6, 0.9))
        t = float(rng.uniform(50, 500))
        H = float(rng.uniform(10, 100))
        out.append(decomposition_check(ComplexPoint(sigma, t), H, sigma0, t, cfg))
    return out
