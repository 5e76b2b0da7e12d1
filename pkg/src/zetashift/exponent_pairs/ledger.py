"""Table of short-interval universality ranges H >= T^theta (log T)^c.

Entries obtained from exponent pairs are recomputed from the pair calculus
on every call; cited inputs (the Bourgain-Watt critical-line exponent and
Balasubramanian's zero-density range) are stored as constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors import ValidationError
from .core import HALF, LAURINCIKAS_DERIVATION, NAMED_PAIRS, as_fraction, replay
from .hull import log_exponent, sigma_bound, t_exponent

HYPOTHESES = ("unconditional", "Lindelof", "RH", "zero-density")

# symbolic exponents that have no rational value
EPS = "eps"
RH_RANGE = "exp((log T)^(1-eps))"
ONE_MINUS_EPS = "1-eps"

BOURGAIN_WATT = Fraction(1273, 4053)
BALASUBRAMANIAN = Fraction(27, 82)

Exponent = Union[Fraction, str]


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    hypothesis: str
    h_exponent: Exponent
    log_exponent: Optional[Fraction] = None
    sigma_restriction: Optional[Exponent] = None
    note: str = ""

    def __post_init__(self):
        if self.hypothesis not in HYPOTHESES:
            raise ValidationError(f"unknown hypothesis {self.hypothesis!r}")
        if isinstance(self.h_exponent, Fraction) and not 0 < self.h_exponent <= 1:
            raise ValidationError(f"h_exponent {self.h_exponent} outside (0, 1]")

    @property
    def is_symbolic(self) -> bool:
        return not isinstance(self.h_exponent, Fraction)


def propagate_mean_square(theta, sigma0=HALF) -> LedgerEntry:
    """Mean-square bound ``<< H T^eps`` on the line sigma0 for H >= T^(theta+eps)
    gives bounded mean square, hence universality, for H >= T^theta on every
    line sigma >= sigma0 + eta.  Recorded as a rule, not computed."""
    theta = as_fraction(theta)
    sigma0 = as_fraction(sigma0)
    if not 0 < theta < 1:
        raise ValidationError(f"theta={theta} outside (0, 1)")
    restriction = None if sigma0 == HALF else sigma0
    return LedgerEntry("propagated", "unconditional", theta,
                       sigma_restriction=restriction,
                       note=f"critical-line exponent {theta} on sigma0={sigma0}")


def ledger() -> list[LedgerEntry]:
    laurincikas = replay(LAURINCIKAS_DERIVATION)
    hb = NAMED_PAIRS["heath-brown"]
    sb = sigma_bound(hb)
    bw = propagate_mean_square(BOURGAIN_WATT)
    return [
        LedgerEntry("TheoremA", "unconditional",
                    t_exponent(laurincikas, HALF), log_exponent(laurincikas),
                    note="exponent pair (4/11,6/11)"),
        LedgerEntry("HeathBrown", "unconditional",
                    t_exponent(hb, HALF), log_exponent(hb),
                    note="exponent pair (9/26,7/13) on sigma=1/2"),
        LedgerEntry("Theorem1", "unconditional", bw.h_exponent,
                    note="Bourgain-Watt critical-line mean square, propagated"),
        LedgerEntry("Theorem2", "unconditional",
                    t_exponent(hb, sb), log_exponent(hb), sigma_restriction=sb,
                    note="exponent pair (9/26,7/13) at its sigma bound"),
        LedgerEntry("Theorem2-eps", "unconditional", EPS,
                    sigma_restriction=ONE_MINUS_EPS,
                    note="restricted_pair(eps) = (eps/2, 1-eps/2)"),
        LedgerEntry("Theorem3", "Lindelof", EPS),
        LedgerEntry("Theorem4", "RH", RH_RANGE),
        LedgerEntry("zero-density", "unconditional", BALASUBRAMANIAN,
                    note="zero-density route; H = T^(27/82+eps)"),
    ]


def lookup(name: str) -> LedgerEntry:
    for entry in ledger():
        if entry.name == name:
            return entry
    raise ValidationError(f"no ledger entry named {name!r}")
