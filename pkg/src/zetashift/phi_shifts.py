"""Shift functions phi > 0 with psi = phi'/phi, their growth axioms, the
T_k partition of [T, 2T] and universality scans along tau -> phi(tau).

Three closed-form families:

* ``polynomial``   phi = p(tau)
* ``exp_poly``     phi = alpha^{p(tau)}
* ``double_exp``   phi = alpha^{beta^{p(tau)}}

Everything is done in log space so ratios phi(b)/phi(a) stay finite even
when phi itself overflows binary64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import NumericRangeError, ValidationError
from .special.zeta import DEFAULT, T_MAX, EvalConfig
from .universality import (DiskDomain, ScanResult, ScanWindow, TargetLike,
                           _check_scan, _summarise, disk_distances)

FAMILIES = ("polynomial", "exp_poly", "double_exp")
GROWTH_RTOL = 1e-12
MONOTONE_RTOL = 1e-12
MAX_PARTITION_STEPS = 10_000_000


def _trim(coeffs) -> tuple[float, ...]:
    c = [float(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PhiFunction:
    family: str
    coeffs: tuple
    alpha: float = math.e
    beta: float = math.e

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown phi family {self.family!r}")
        c = _trim(self.coeffs)
        if not all(math.isfinite(x) for x in c):
            raise ValidationError("phi coefficients must be finite")
        if len(c) < 2:
            raise ValidationError("phi is constant (polynomial degree must be >= 1)")
        if self.family == "polynomial" and c[-1] <= 0:
            raise ValidationError("polynomial phi needs a positive leading coefficient")
        if self.family != "polynomial" and not self.alpha > 1:
            raise ValidationError("alpha must be > 1")
        if self.family == "double_exp" and not self.beta > 1:
            raise ValidationError("beta must be > 1")
        object.__setattr__(self, "coeffs", c)

    # constructors -------------------------------------------------------
    @classmethod
    def polynomial(cls, *coeffs) -> "PhiFunction":
        return cls("polynomial", coeffs)

    @classmethod
    def exp_poly(cls, *coeffs, alpha: float = math.e) -> "PhiFunction":
        return cls("exp_poly", coeffs, alpha=alpha)

    @classmethod
    def double_exp(cls, *coeffs, alpha: float = math.e, beta: float = math.e) -> "PhiFunction":
        return cls("double_exp", coeffs, alpha=alpha, beta=beta)

    @classmethod
    def parse(cls, text: str) -> "PhiFunction":
        """``exp:r`` (e^{r tau}), ``poly:c0,c1,...``,
        ``exppoly:base=a,coeffs=c0,c1,...``,
        ``doubleexp:alpha=a,beta=b,coeffs=c0,c1,...``."""
        try:
            kind, body = text.split(":", 1)
            kind = kind.strip().lower()
            if kind == "exp":
                return cls.exp_poly(0.0, float(body))
            if kind == "poly":
                return cls.polynomial(*(float(x) for x in body.split(",")))
            fields = _keyed_fields(body)
            coeffs = [float(x) for x in fields.pop("coeffs")]
            if kind == "exppoly":
                base = _one(fields.pop("base", fields.pop("alpha", ["e"])))
                out = cls.exp_poly(*coeffs, alpha=base)
            elif kind == "doubleexp":
                a = _one(fields.pop("alpha", ["e"]))
                b = _one(fields.pop("beta", ["e"]))
                out = cls.double_exp(*coeffs, alpha=a, beta=b)
            else:
                raise ValidationError(f"unknown phi kind {kind!r}")
            if fields:
                raise ValidationError(f"unexpected phi fields {sorted(fields)}")
            return out
        except (ValueError, KeyError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed phi {text!r}") from exc

    def describe(self) -> str:
        cs = ",".join(f"{c:g}" for c in self.coeffs)
        if self.family == "polynomial":
            return f"poly:{cs}"
        if self.family == "exp_poly":
            return f"exppoly:base={self.alpha:.17g},coeffs={cs}"
        return f"doubleexp:alpha={self.alpha:.17g},beta={self.beta:.17g},coeffs={cs}"

    # closed forms -------------------------------------------------------
    @property
    def _c(self) -> np.ndarray:
        return np.array(self.coeffs)

    def p(self, tau):
        return P.polyval(tau, self._c)

    def dp(self, tau):
        return P.polyval(tau, P.polyder(self._c))

    def p_diff(self, a, h):
        """p(a + h) - p(a) without cancellation: sum_k p^(k)(a) h^k / k!."""
        a = np.asarray(a, dtype=float)
        h = np.asarray(h, dtype=float)
        out = np.zeros(np.broadcast(a, h).shape)
        c = self._c
        hk, fact = np.ones_like(out), 1.0
        for k in range(1, len(c)):
            c = P.polyder(c)
            fact *= k
            hk = hk * h
            out = out + P.polyval(a, c) / fact * hk
        return out

    def log_phi(self, tau):
        tau = np.asarray(tau, dtype=float)
        if self.family == "polynomial":
            with np.errstate(invalid="ignore", divide="ignore"):
                return np.log(self.p(tau))
        if self.family == "exp_poly":
            return self.p(tau) * math.log(self.alpha)
        return np.exp(self.p(tau) * math.log(self.beta)) * math.log(self.alpha)

    def phi(self, tau):
        return np.exp(self.log_phi(tau))

    def psi(self, tau):
        tau = np.asarray(tau, dtype=float)
        if self.family == "polynomial":
            return self.dp(tau) / self.p(tau)
        if self.family == "exp_poly":
            return self.dp(tau) * math.log(self.alpha)
        lb = math.log(self.beta)
        return math.log(self.alpha) * lb * self.dp(tau) * np.exp(self.p(tau) * lb)

    def log_ratio(self, a, h):
        """log phi(a + h) - log phi(a)."""
        d = self.p_diff(a, h)
        if self.family == "polynomial":
            return np.log1p(d / self.p(a))
        if self.family == "exp_poly":
            return d * math.log(self.alpha)
        lb = math.log(self.beta)
        return math.log(self.alpha) * np.exp(self.p(a) * lb) * np.expm1(d * lb)

    def log_dphi(self, tau):
        """log phi'(tau) = log psi + log phi."""
        return np.log(self.psi(tau)) + self.log_phi(tau)

    def check_range(self, lo: float, hi: float):
        """Raise unless phi > 0 and psi > 0 on [lo, hi]."""
        if not (math.isfinite(lo) and math.isfinite(hi) and 0 < lo <= hi):
            raise ValidationError(f"invalid tau range [{lo}, {hi}]")
        for poly in (self._c, P.polyder(self._c)):
            if self.family != "polynomial" and poly is self._c:
                continue
            roots = np.roots(poly[::-1]) if len(poly) > 1 else np.array([])
            real = roots[np.abs(roots.imag) <= 1e-9 * np.maximum(1, np.abs(roots))].real
            if np.any((real >= lo) & (real <= hi)):
                raise ValidationError(f"phi or phi' changes sign in [{lo}, {hi}]")
        probe = np.linspace(lo, hi, 9)
        psi = self.psi(probe)
        if np.any(~(psi > 0)):
            raise ValidationError(f"psi is not positive on [{lo}, {hi}]")
        if self.family == "polynomial" and np.any(~(self.p(probe) > 0)):
            raise ValidationError(f"phi is not positive on [{lo}, {hi}]")


def _keyed_fields(body: str) -> dict:
    out: dict[str, list[str]] = {}
    key = None
    for tok in body.split(","):
        tok = tok.strip()
        if "=" in tok:
            key, val = tok.split("=", 1)
            key = key.strip().lower()
            out[key] = [val.strip()]
        elif key is None:
            raise ValidationError(f"value {tok!r} before any key")
        else:
            out[key].append(tok)
    return out


def _one(vals) -> float:
    if len(vals) != 1:
        raise ValidationError("expected a single value")
    v = vals[0].strip().lower()
    return math.e if v == "e" else float(v)


# the families exercised by growth and axiom regressions
BUILTIN = {
    "tau": PhiFunction.polynomial(0, 1),
    "tau^2": PhiFunction.polynomial(0, 0, 1),
    "tau^3": PhiFunction.polynomial(0, 0, 0, 1),
    "e^tau": PhiFunction.exp_poly(0, 1),
    "2^tau": PhiFunction.exp_poly(0, 1, alpha=2.0),
    "e^(tau^2)": PhiFunction.exp_poly(0, 0, 1),
    "e^(e^(tau/10))": PhiFunction.double_exp(0, 0.1),
    "2^(2^(tau/20))": PhiFunction.double_exp(0, 0.05, alpha=2.0, beta=2.0),
}


def psi_of(phi: PhiFunction, tau: float) -> float:
    if not tau > 0:
        raise ValidationError(f"tau={tau} must be positive")
    phi.check_range(tau, tau)
    v = float(phi.psi(tau))
    if not (math.isfinite(v) and v > 0):
        raise NumericRangeError(f"psi({tau}) = {v} is not finite and positive")
    return v


def _samples(T: float, samples: int) -> np.ndarray:
    if not T >= 3:
        raise ValidationError(f"T={T} must be >= 3")
    if samples < 100:
        raise ValidationError("samples must be >= 100")
    return np.linspace(T, 2 * T, samples)


def _monotone(x: np.ndarray) -> str | None:
    d = np.diff(x)
    tol = MONOTONE_RTOL * np.maximum(np.maximum(np.abs(x[1:]), np.abs(x[:-1])), 1.0)
    if np.all(d >= -tol):
        return "increasing"
    if np.all(d <= tol):
        return "decreasing"
    return None


@dataclass
class AxiomReport:
    axiom_i_ok: bool
    axiom_i_constant: float
    axiom_ii_case: str | None
    axiom_ii_constants: dict
    sampled_range: tuple[float, float]
    phi_prime_increasing: bool
    fd_psi_max_rel_err: float
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.axiom_i_ok and self.axiom_ii_case is not None


def check_axioms(phi: PhiFunction, T: float, samples: int = 1000) -> AxiomReport:
    """Sample tau uniformly in [T, 2T] and test both axioms.

    Reported constants are the observed extremes over the sample, not proofs.
    """
    tau = _samples(T, samples)
    psi = phi.psi(tau)
    step = 1.0 / psi
    phi.check_range(T, 2 * T + float(np.max(step)))
    notes = []

    # (i): phi' increasing and phi'(tau + 1/psi) / phi'(tau) bounded
    log_dphi = phi.log_dphi(tau)
    inc = _monotone(log_dphi) == "increasing" if np.all(np.isfinite(log_dphi)) else \
        bool(np.all(np.diff(phi.dp(tau)) >= 0))
    log_ratio_i = np.log(phi.psi(tau + step) / psi) + phi.log_ratio(tau, step)
    const_i = float(np.exp(np.max(log_ratio_i)))
    ok_i = bool(inc and math.isfinite(const_i))

    # (ii): psi monotone with the matching lower bound
    case = _monotone(psi)
    consts: dict = {}
    if case == "increasing":
        jump = phi.psi(tau + step) - psi
        step_sup = float(max(np.max(jump), 0.0))
        inv_lower = float(1.0 / np.min(psi))
        consts = {"A": max(step_sup, inv_lower), "step_sup": step_sup, "inv_lower": inv_lower}
        case = "increasing_bounded_step"
        if step_sup == 0:
            notes.append("psi is constant on the range; A is set by 1/min psi")
    elif case == "decreasing":
        consts = {"B": float(np.min(tau * psi))}
        case = "decreasing_lower_bounded"
    else:
        notes.append("psi is not monotone on the sampled range")

    # finite-difference cross-check of psi
    h = 1e-5 * tau
    fd = (phi.log_ratio(tau, h) - phi.log_ratio(tau, -h)) / (2 * h)
    fd_err = float(np.max(np.abs(fd - psi) / np.abs(psi)))

    return AxiomReport(ok_i, const_i, case, consts, (float(T), float(2 * T)),
                       bool(inc), fd_err, notes)


@dataclass
class GrowthResult:
    C: float
    min_ratio: float
    log_min_ratio: float
    ok: bool


def growth_check(phi: PhiFunction, T: float, C: float, samples: int = 1000) -> GrowthResult:
    """min over tau in [T, 2T] of phi(tau + C/psi(tau)) / phi(tau), against C + 1."""
    if not C > 0:
        raise ValidationError("C must be positive")
    tau = _samples(T, samples)
    step = C / phi.psi(tau)
    phi.check_range(T, 2 * T + float(np.max(step)))
    lr = phi.log_ratio(tau, step)
    m = float(np.min(lr))
    target = math.log1p(C)
    with np.errstate(over="ignore"):
        ratio = float(np.exp(m))
    return GrowthResult(float(C), ratio, m, bool(m >= target - GROWTH_RTOL * max(1.0, target)))


@dataclass
class PartitionResult:
    points: list
    K: int
    sum_check: float
    endpoint_check: float
    steps: list = field(default_factory=list, repr=False)   # 1/psi(T_{k-1}), k = 1..K
    psi_values: list = field(default_factory=list, repr=False)


def build_partition(phi: PhiFunction, T: float, max_steps: int = MAX_PARTITION_STEPS) -> PartitionResult:
    """T_0 = T, T_k = T_{k-1} + 1/psi(T_{k-1}) until T_k >= 2T (sequential)."""
    if not T >= 3:
        raise ValidationError(f"T={T} must be >= 3")
    phi.check_range(T, 2 * T)
    case = _monotone(phi.psi(np.linspace(T, 2 * T, 1001)))
    if case != "increasing":
        raise ValidationError("partition needs psi increasing on [T, 2T]")
    pts = [float(T)]
    steps = []
    psis = [float(phi.psi(T))]
    cur = float(T)
    while cur < 2 * T:
        if len(steps) >= max_steps:
            raise NumericRangeError(f"partition needs more than {max_steps} steps")
        inv = 1.0 / psis[-1]
        if not (math.isfinite(inv) and inv > 0):
            raise NumericRangeError(f"1/psi({cur}) = {inv} is not usable as a step")
        cur = cur + inv
        steps.append(inv)
        pts.append(cur)
        psis.append(float(phi.psi(cur)))
    K = len(steps)
    return PartitionResult(pts, K, math.fsum(steps) - T, pts[-1] - 2 * T, steps, psis)


def _affine(phi: PhiFunction) -> tuple[float, float] | None:
    if phi.family == "polynomial" and len(phi.coeffs) == 2:
        return phi.coeffs[0], phi.coeffs[1]
    return None


def scan_shifted(phi: PhiFunction, disk: DiskDomain, target: TargetLike, T: float,
                 step: float, epsilon: float, boundary_samples: int = 64,
                 cfg: EvalConfig = DEFAULT) -> ScanResult:
    """Density of tau in [T, 2T] (step grid) with
    max_disk |zeta(s + i phi(tau)) - f(s)| < epsilon."""
    w = ScanWindow(T, T, step)
    _check_scan(disk, target, w, epsilon)
    taus = w.taus()
    phi.check_range(max(T, 1e-300), 2 * T)
    top = float(phi.log_phi(taus[-1]))
    if not top <= math.log(T_MAX):
        raise NumericRangeError(
            f"phi(2T) = exp({top:.6g}) exceeds the zeta range |t| <= {T_MAX:g}")
    aff = _affine(phi)
    if aff is not None:
        a, b = aff
        t0, dt, M = w.grid
        shifts = a + b * taus
        d = disk_distances(disk, target, uniform=(a + b * t0, b * dt, M),
                           boundary_samples=boundary_samples, cfg=cfg)
    else:
        shifts = phi.phi(taus)
        d = disk_distances(disk, target, shifts=shifts,
                           boundary_samples=boundary_samples, cfg=cfg)
    return _summarise(w, epsilon, taus, d, shifts)


__all__ = ["PhiFunction", "AxiomReport", "GrowthResult", "PartitionResult", "BUILTIN",
           "psi_of", "check_axioms", "growth_check", "build_partition", "scan_shifted"]
