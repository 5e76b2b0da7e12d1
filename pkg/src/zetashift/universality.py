"""Empirical universality: how often do vertical shifts of zeta approximate a
target on a small disk?

For a shift tau the distance ``max_{s in disk} |zeta(s + i tau) - f(s)|`` is
attained on the boundary circle (maximum modulus).  Zeta on the circle is
assembled from a Taylor expansion of the Dirichlet partial sum about the
disk centre plus the Euler-Maclaurin tail evaluated pointwise; the boundary
sample count is doubled until the maximum is stable to 1e-3 relative.

Densities are grid averages over tau; they say nothing about the liminf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import NumericRangeError, ValidationError
from .special.zeta import (DEFAULT, T_MAX, EvalConfig, em_tail, line_moments,
                           point_moments, truncation)

SAMPLE_RTOL = 1e-3
MAX_BOUNDARY_SAMPLES = 4096
MAX_SCAN_STEP = 0.1
_ROW_CHUNK = 4096
NONVANISHING_FLOOR = 1e-6


@dataclass(frozen=True)
class DiskDomain:
    center_sigma: float
    radius: float
    center_t: float = 0.0

    def __post_init__(self):
        if not self.radius > 0:
            raise ValidationError("disk radius must be positive")
        if not (self.center_sigma - self.radius > 0.5 and self.center_sigma + self.radius < 1):
            raise ValidationError(
                f"disk {self.center_sigma}+-{self.radius} is not inside 1/2 < sigma < 1")

    @property
    def center(self) -> complex:
        return complex(self.center_sigma, self.center_t)

    def boundary(self, P: int) -> np.ndarray:
        theta = 2 * np.pi * np.arange(P) / P
        return self.center + self.radius * np.exp(1j * theta)

    def interior_grid(self, rings: int = 16, P: int = 64) -> np.ndarray:
        rho = self.radius * np.linspace(0, 1, rings + 1)
        theta = 2 * np.pi * np.arange(P) / P
        return (self.center + rho[:, None] * np.exp(1j * theta)[None, :]).ravel()


@dataclass(frozen=True)
class ScanWindow:
    """Shift grid tau = T, T+step, ..., T+H.  Unlike the mean-square window
    there is no H <= T requirement and T may be 0."""
    T: float
    H: float
    step: float = 0.05

    def __post_init__(self):
        if not (math.isfinite(self.T) and self.T >= 0):
            raise ValidationError(f"scan start T={self.T} must be finite and >= 0")
        if not (math.isfinite(self.H) and self.H > 0):
            raise ValidationError(f"scan length H={self.H} must be positive")
        if not 0 < self.step <= min(MAX_SCAN_STEP, self.H):
            raise ValidationError(
                f"step={self.step} must satisfy 0 < step <= min({MAX_SCAN_STEP}, H)")

    @property
    def grid(self) -> tuple[float, float, int]:
        n = int(math.floor(self.H / self.step + 1e-9))
        return self.T, self.step, n + 1

    def taus(self) -> np.ndarray:
        t0, dt, M = self.grid
        return t0 + dt * np.arange(M)


TARGET_KINDS = ("constant", "polynomial", "exp_polynomial")
_KIND_ALIASES = {"const": "constant", "poly": "polynomial", "exppoly": "exp_polynomial"}


@dataclass(frozen=True)
class Target:
    """f(s) = c0, sum c_k s^k, or exp(sum c_k s^k)."""
    kind: str
    coefficients: tuple

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind, self.kind)
        if kind not in TARGET_KINDS:
            raise ValidationError(f"unknown target kind {self.kind!r}")
        coeffs = tuple(complex(c) for c in self.coefficients)
        if not coeffs:
            raise ValidationError("target needs at least one coefficient")
        if kind == "constant" and len(coeffs) != 1:
            raise ValidationError("constant target takes exactly one value")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def constant(cls, c) -> "Target":
        return cls("constant", (c,))

    @classmethod
    def parse(cls, text: str) -> "Target":
        """``const:1.0``, ``poly:c0,c1,...`` or ``exppoly:c0,c1,...``;
        coefficients may be complex literals such as ``1+2j``."""
        try:
            kind, body = text.split(":", 1)
            coeffs = tuple(complex(c.strip()) for c in body.split(","))
        except ValueError as exc:
            raise ValidationError(f"malformed target {text!r}") from exc
        return cls(kind.strip(), coeffs)

    def __call__(self, s):
        s = np.asarray(s, dtype=complex)
        poly = np.polynomial.polynomial.polyval(s, np.array(self.coefficients))
        if self.kind == "exp_polynomial":
            return np.exp(poly)
        if self.kind == "constant":
            return np.full_like(s, self.coefficients[0])
        return poly

    def check_nonvanishing(self, disk: DiskDomain) -> float:
        """Minimum |f| on a dense disk grid; raises if below the floor."""
        m = float(np.min(np.abs(self(disk.interior_grid()))))
        if self.kind != "exp_polynomial" and m <= NONVANISHING_FLOOR:
            raise ValidationError(f"target (nearly) vanishes on the disk: min |f| = {m:.3g}")
        return m


TargetLike = Callable[[np.ndarray], np.ndarray]


@dataclass
class ScanResult:
    window: ScanWindow
    epsilon: float
    density: float
    best_tau: float
    best_distance: float
    samples: int
    taus: np.ndarray = field(repr=False)
    distances: np.ndarray = field(repr=False)
    shifts: np.ndarray | None = field(default=None, repr=False)
    offset: float = 0.0

    @property
    def accepted(self) -> int:
        return int(np.count_nonzero(self.distances < self.epsilon))

    @property
    def measure(self) -> float:
        return self.density * self.window.H


def _taylor_order(radius: float, n_hi: int, sigma_lo: float) -> int:
    """Terms needed so the dropped Taylor tail of the partial sum is < 1e-13."""
    x = radius * math.log(max(n_hi, 2))
    scale = n_hi ** max(1 - sigma_lo, 0.0) / max(1 - sigma_lo, 1e-3) * math.exp(x)
    k, term = 0, 1.0
    while term * scale > 1e-13 and k < 80:
        k += 1
        term *= x / k
    return max(k + 1, 4)


def _moments(disk: DiskDomain, shifts, uniform, K, offset, cfg):
    base = disk.center_t + offset
    if uniform is not None:
        t0, dt, M = uniform
        return line_moments(disk.center_sigma, base + t0, dt, M, K, cfg)
    return point_moments(disk.center_sigma, base + shifts, K, cfg)


def _distances_at(P, disk, target, moments, n_rows, t_centres, cfg):
    K = moments.shape[1]
    theta = 2 * np.pi * np.arange(P) / P
    w = disk.radius * np.exp(1j * theta)
    vand = w[None, :] ** np.arange(K)[:, None]          # K x P
    f_vals = np.asarray(target(disk.center_sigma + w + 1j * disk.center_t), dtype=complex)
    out = np.empty(len(t_centres))
    for a in range(0, len(t_centres), _ROW_CHUNK):
        b = a + _ROW_CHUNK
        partial = moments[a:b] @ vand
        s = (disk.center_sigma + w.real)[None, :] + 1j * (t_centres[a:b, None] + w.imag[None, :])
        z = partial + em_tail(s, n_rows[a:b, None], cfg.em_corrections)
        out[a:b] = np.max(np.abs(z - f_vals[None, :]), axis=1)
    return out


def disk_distances(disk: DiskDomain, target: TargetLike, shifts=None,
                   uniform: tuple | None = None, boundary_samples: int = 64,
                   cfg: EvalConfig = DEFAULT, offset: float = 0.0) -> np.ndarray:
    """Sup-distances max |zeta(s + i(offset + tau)) - f(s)| over the disk.

    Pass either explicit ``shifts`` or ``uniform=(t0, dt, M)`` for the grid
    t0 + j*dt (faster, block-recurrent Dirichlet sums).
    """
    if boundary_samples < 16:
        raise ValidationError("boundary_samples must be >= 16")
    if uniform is not None:
        t0, dt, M = uniform
        shifts_arr = t0 + dt * np.arange(M)
    else:
        shifts_arr = np.atleast_1d(np.asarray(shifts, dtype=float))
    t_centres = (disk.center_t + offset) + shifts_arr
    if t_centres.size == 0:
        return np.zeros(0)
    if not np.all(np.isfinite(t_centres)) or np.max(np.abs(t_centres)) + disk.radius > T_MAX:
        raise NumericRangeError(f"shifted disk leaves the zeta range |t| <= {T_MAX:g}")
    n_hi = int(truncation(np.max(np.abs(t_centres)) + disk.radius, cfg))
    K = _taylor_order(disk.radius, n_hi, disk.center_sigma - disk.radius)
    moments, n_rows = _moments(disk, shifts_arr, uniform, K, offset, cfg)

    P = boundary_samples
    d = _distances_at(P, disk, target, moments, n_rows, t_centres, cfg)
    active = np.arange(len(d))
    while active.size and P < MAX_BOUNDARY_SAMPLES:
        P *= 2
        d2 = _distances_at(P, disk, target, moments[active], n_rows[active],
                           t_centres[active], cfg)
        change = np.abs(d2 - d[active]) / np.maximum(d2, 1e-300)
        d[active] = d2
        active = active[change >= SAMPLE_RTOL]
    return d


def sup_distance(tau: float, disk: DiskDomain, target: TargetLike,
                 boundary_samples: int = 64, cfg: EvalConfig = DEFAULT) -> float:
    return float(disk_distances(disk, target, [tau], None, boundary_samples, cfg)[0])


def _summarise(w, epsilon, taus, d, shifts=None, offset=0.0) -> ScanResult:
    i = int(np.argmin(d))
    return ScanResult(w, epsilon, float(np.mean(d < epsilon)), float(taus[i]),
                      float(d[i]), len(d), taus, d, shifts, offset)


def _check_scan(disk, target, w, epsilon):
    if not isinstance(w, ScanWindow):
        raise ValidationError("scan window must be a ScanWindow")
    if not epsilon > 0:
        raise ValidationError("epsilon must be positive")
    if isinstance(target, Target):
        target.check_nonvanishing(disk)


def scan_interval(disk: DiskDomain, target: TargetLike, w: ScanWindow, epsilon: float,
                  boundary_samples: int = 64, cfg: EvalConfig = DEFAULT,
                  offset: float = 0.0) -> ScanResult:
    """Fraction of tau in {T, T+step, ..., T+H} with sup-distance < epsilon.

    ``offset`` pre-shifts the zeta evaluation: zeta(s + i(offset + tau)).
    """
    _check_scan(disk, target, w, epsilon)
    t0, dt, M = w.grid
    d = disk_distances(disk, target, uniform=(t0, dt, M),
                       boundary_samples=boundary_samples, cfg=cfg, offset=offset)
    return _summarise(w, epsilon, w.taus(), d, offset=offset)


def curve_from_distances(distances: np.ndarray, eps_list: Sequence[float]):
    eps = list(eps_list)
    if any(b < a for a, b in zip(eps, eps[1:])):
        raise ValidationError("eps_list must be ascending")
    d = np.asarray(distances)
    return [(float(e), float(np.mean(d < e))) for e in eps]


def density_curve(disk: DiskDomain, target: TargetLike, w: ScanWindow,
                  eps_list: Sequence[float], boundary_samples: int = 64,
                  cfg: EvalConfig = DEFAULT):
    """(epsilon, density) pairs from one pass of sup-distances."""
    eps = list(eps_list)
    if not eps:
        raise ValidationError("empty eps_list")
    res = scan_interval(disk, target, w, max(eps), boundary_samples, cfg)
    return curve_from_distances(res.distances, eps)


@dataclass
class HalvingCheck:
    density: float
    density_half: float
    delta: float


def step_halving_check(base: ScanResult, disk: DiskDomain, target: TargetLike,
                       boundary_samples: int = 64, cfg: EvalConfig = DEFAULT) -> HalvingCheck:
    """Density on the grid with half the step, reusing the samples of ``base``."""
    t0, dt, M = base.window.grid
    mids = disk_distances(disk, target, uniform=(t0 + dt / 2, dt, M - 1),
                          boundary_samples=boundary_samples, cfg=cfg, offset=base.offset)
    acc = base.accepted + int(np.count_nonzero(mids < base.epsilon))
    dens_half = acc / (M + M - 1)
    return HalvingCheck(base.density, dens_half, abs(dens_half - base.density))


def merge_scans(first: ScanResult, second: ScanResult) -> tuple[int, int]:
    """(accepted, samples) of two adjacent scans sharing one boundary sample."""
    shared = int(first.distances[-1] < first.epsilon)
    return (first.accepted + second.accepted - shared,
            first.samples + second.samples - 1)
