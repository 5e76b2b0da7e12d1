"""The recorded reference scan: disk 3/4 +- 1/20, f = 1, tau in
[100, 100 + 10^4] at step 0.05, epsilon 0.75.  Prints the density, the
step-halving check and an epsilon curve; optionally writes the
(tau, sup_distance) CSV.

    python scripts/reference_scan.py --csv scan.csv
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from zetashift.serialize import to_csv
from zetashift.universality import (DiskDomain, ScanWindow, Target, curve_from_distances,
                                    scan_interval, step_halving_check)


@dataclass
class Config:
    center: float = 0.75
    radius: float = 0.05
    target: str = "const:1.0"
    T: float = 100.0
    H: float = 10_000.0
    step: float = 0.05
    epsilon: float = 0.75
    eps_curve: tuple = (0.1, 0.25, 0.5, 0.75, 1.0, 2.0, 5.0)


def main(cfg: Config, csv_path: str | None = None, halving: bool = True):
    disk = DiskDomain(cfg.center, cfg.radius)
    target = Target.parse(cfg.target)
    t0 = time.perf_counter()
    res = scan_interval(disk, target, ScanWindow(cfg.T, cfg.H, cfg.step), cfg.epsilon)
    print(f"{res.samples} samples in {time.perf_counter() - t0:.1f}s")
    print(f"density {res.density:.6f}  measure {res.measure:.2f}  "
          f"best tau {res.best_tau:.2f} (distance {res.best_distance:.4g})")
    for e, d in curve_from_distances(res.distances, cfg.eps_curve):
        print(f"  eps {e:<5g} density {d:.6f}")
    if halving:
        chk = step_halving_check(res, disk, target)
        print(f"half step: density {chk.density_half:.6f}  |change| {chk.delta:.2e}")
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(to_csv(res))
        print(f"wrote {csv_path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--H", type=float, default=10_000.0)
    ap.add_argument("--epsilon", type=float, default=0.75)
    ap.add_argument("--csv")
    ap.add_argument("--no-halving", action="store_true")
    a = ap.parse_args()
    main(Config(H=a.H, epsilon=a.epsilon), a.csv, not a.no_halving)
