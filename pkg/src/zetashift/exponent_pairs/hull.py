"""Lower convex boundary of a pair set and minimisation of the T-exponent."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..errors import ConstraintViolation, InfeasibleError, ValidationError
from .core import HALF, ExponentPair, Rational, as_fraction, convex_combine, seed


@dataclass(frozen=True)
class HullPolyline:
    vertices: tuple[ExponentPair, ...]

    def segments(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def cross(o: ExponentPair, a: ExponentPair, b: ExponentPair) -> Fraction:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return ((a.kappa - o.kappa) * (b.lam - o.lam)
            - (a.lam - o.lam) * (b.kappa - o.kappa))


def lower_hull(ps: Iterable[ExponentPair]) -> HullPolyline:
    """Monotone-chain lower hull, exact.

    Collinear interior points are dropped.  When a coordinate appears both
    with and without the eps flag, the exact (non-eps) pair is kept.
    """
    pts = sorted(ps, key=lambda p: p.key)
    if not pts:
        raise ValidationError("lower_hull of an empty pair set")
    uniq = []
    for p in pts:
        if uniq and (uniq[-1].kappa, uniq[-1].lam) == (p.kappa, p.lam):
            continue
        uniq.append(p)
    chain: list[ExponentPair] = []
    for p in uniq:
        # only the lowest point at each kappa can be on the lower chain
        if chain and chain[-1].kappa == p.kappa:
            continue
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return HullPolyline(tuple(chain))


def point_on_or_above(p: ExponentPair, a: ExponentPair, b: ExponentPair) -> bool:
    """True if p is on or above the line through segment a->b (a left of b)."""
    return cross(a, b, p) >= 0


def sigma_bound(p: ExponentPair) -> Fraction:
    """Largest sigma with 1 + lambda - kappa >= 2 sigma."""
    return (1 + p.lam - p.kappa) / 2


def is_admissible(p: ExponentPair, sigma: Rational) -> bool:
    return 1 + p.lam - p.kappa >= 2 * as_fraction(sigma)


def t_exponent(p: ExponentPair, sigma: Rational) -> Fraction:
    """Exponent theta in H = T^theta for the mean-square range on line sigma."""
    sigma = as_fraction(sigma)
    if not HALF <= sigma < 1:
        raise ValidationError(f"sigma={sigma} outside [1/2, 1)")
    if not is_admissible(p, sigma):
        raise ConstraintViolation(
            f"1 + lambda - kappa >= 2 sigma fails for {p!r} at sigma={sigma}: "
            f"{1 + p.lam - p.kappa} < {2 * sigma}")
    return (p.kappa + p.lam + 1 - 2 * sigma) / (2 * p.kappa + 2)


def log_exponent(p: ExponentPair) -> Fraction:
    """Power of log T accompanying the T-exponent."""
    return (p.kappa + 2) / (p.kappa + 1)


def _rank(p: ExponentPair, sigma: Fraction):
    return (t_exponent(p, sigma), p.kappa, p.lam, p.eps_limit)


def optimize_theta(ps: Iterable[ExponentPair], sigma: Rational) -> tuple[ExponentPair, Fraction]:
    """Admissible pair with the smallest T-exponent.

    The objective is linear-fractional with a positive denominator and is
    strictly increasing in lambda, so its minimum over the convex hull of the
    admissible pairs is attained at a vertex of the lower chain.  Ties go to
    smaller kappa, then smaller lambda, then the exact (non-eps) pair.  A
    result with ``eps_limit`` set holds only as an infimum ("+eps").
    """
    sigma = as_fraction(sigma)
    admissible = [p for p in ps if is_admissible(p, sigma)]
    if not admissible:
        raise InfeasibleError(f"no pair satisfies 1 + lambda - kappa >= 2 sigma at sigma={sigma}")
    hull = lower_hull(admissible)
    best = min(hull.vertices, key=lambda p: _rank(p, sigma))
    return best, t_exponent(best, sigma)


def restricted_pair(eps: Rational) -> ExponentPair:
    """Pair with 0 < kappa < eps and 1 - eps < lambda < 1 from the trivial pairs."""
    eps = as_fraction(eps)
    if not 0 < eps < HALF:
        raise ValidationError(f"eps={eps} outside (0, 1/2)")
    return convex_combine(seed(HALF, HALF), seed(0, 1), eps)
