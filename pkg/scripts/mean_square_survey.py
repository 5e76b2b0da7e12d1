"""Short-interval mean squares of |zeta(sigma + it)|^2 against their
expected limits as T doubles, plus the Lemma 1 suite and majorant constants.

    python scripts/mean_square_survey.py --H 100 --T-max 64000
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from zetashift.mean_square import Window, lemma1_suite, mean_square, mv_majorant


@dataclass
class Config:
    sigmas: tuple = (0.6, 0.75, 1.0)
    H: float = 100.0
    T_min: float = 1000.0
    T_max: float = 64000.0


def main(cfg: Config):
    for sigma in cfg.sigmas:
        print(f"sigma = {sigma}")
        T = cfg.T_min
        while T <= cfg.T_max:
            r = mean_square(sigma, Window(T, cfg.H))
            print(f"  T={T:>8g}  mean={r.value:10.5f}  ref={r.reference:9.5f} "
                  f"({r.reference_kind})  ratio={r.ratio:7.4f}  delta={r.refinement_delta:.1e}")
            T *= 2
    print("Lemma 1 suite (implied constants):")
    for r in lemma1_suite():
        print(f"  sigma={r.sigma:<5} sigma0={r.sigma0:<5} T={r.window.T:<7g} "
              f"H={r.window.H:<5g} C={r.implied_constant:.4f}")
    print("majorant constants:")
    for sigma, H in [(0.6, 10), (0.75, 10), (0.75, 100), (0.9, 1), (1.0, 50)]:
        m = mv_majorant(sigma, H, 1000.0)
        print(f"  sigma={sigma:<5} H={H:<4} I1={m.i1_estimate:12.5f} "
              f"majorant={m.majorant:12.5f}  C={m.constant:.4f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--H", type=float, default=100.0)
    ap.add_argument("--T-max", type=float, default=64000.0)
    a = ap.parse_args()
    main(Config(H=a.H, T_max=a.T_max))
