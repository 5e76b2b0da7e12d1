"""Rebuild the exponent-pair closure, optimise theta at a few sigma values
and print the ledger of H-exponents.

    python scripts/reproduce_exponents.py --depth 8
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from zetashift.exponent_pairs import (fmt_fraction, generate_pairs, ledger, log_exponent,
                                      lower_hull, optimize_theta)


@dataclass
class Config:
    depth: int = 6
    named: bool = True
    sigmas: tuple = (Fraction(1, 2), Fraction(31, 52), Fraction(3, 4))


def main(cfg: Config):
    pairs = generate_pairs(cfg.depth, include_named=cfg.named)
    hull = lower_hull(list(pairs))
    print(f"closure at depth {cfg.depth}: {len(pairs)} pairs, {len(hull.vertices)} hull vertices")
    for sigma in cfg.sigmas:
        best, theta = optimize_theta(pairs, sigma)
        print(f"sigma={fmt_fraction(sigma):>6}  theta={fmt_fraction(theta):>8} "
              f"({float(theta):.6f})  pair=({fmt_fraction(best.kappa)}, "
              f"{fmt_fraction(best.lam)})  log^{fmt_fraction(log_exponent(best))}  "
              f"{best.derivation}")
    print()
    for e in ledger():
        h = e.h_exponent
        bound = h if isinstance(h, str) and h.startswith("exp") else \
            f"T^{h if isinstance(h, str) else fmt_fraction(h)}"
        print(f"{e.name:<14} {e.hypothesis:<10} H >= {bound}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--no-named", action="store_true")
    a = ap.parse_args()
    main(Config(depth=a.depth, named=not a.no_named))
