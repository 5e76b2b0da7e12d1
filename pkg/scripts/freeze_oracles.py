"""Compute independent reference values once and freeze them to
tests/data/oracles.json.

* zeta, Gamma, zeta_H: mpmath at 30 digits
* an Euler-Maclaurin oracle written directly in mpmath with twice the
  truncation and twice the correction terms
* coarse brute-force scans: every boundary point evaluated with the direct
  per-point zeta path (no Taylor moments, no block recurrence)

Run:  python scripts/freeze_oracles.py
"""

from __future__ import annotations

import json
import math
import time
from pathlib import Path

import mpmath as mp
import numpy as np

from zetashift.special.zeta import zeta

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracles.json"
mp.mp.dps = 30

ZETA_POINTS = [(2, 0), (4, 0), (0, 0), (0.75, 100), (0.5, 14.134725141734693),
               (0.6, 1000), (0.9, 10000), (0.75, 99999.5), (0.55, 250000.25),
               (-1.5, 30), (1.5, -40), (0.8, 0.3)]
GAMMA_POINTS = [(1, 0), (0.5, 0), (-0.25, 3), (5, 100), (-4.5, 1), (0.3, 900),
                (9.5, -20), (-2.7, 35), (0.01, 0.01), (2, 600)]


def em_oracle(s, N, K):
    s = mp.mpc(s)
    total = mp.fsum(mp.power(n, -s) for n in range(1, N))
    total += mp.power(N, 1 - s) / (s - 1) + mp.power(N, -s) / 2
    rising = s
    for k in range(1, K + 1):
        total += mp.bernoulli(2 * k) / mp.factorial(2 * k) * rising * mp.power(N, -s - 2 * k + 1)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
    return total


def cplx(z):
    return [float(mp.re(z)), float(mp.im(z))]


def brute_distances(center, radius, taus_or_shifts, P=256):
    """max over P boundary points of |zeta(s + i shift) - 1|, direct path."""
    w = radius * np.exp(2j * np.pi * np.arange(P) / P)
    out = []
    for sh in taus_or_shifts:
        z = zeta(center + w + 1j * sh)
        out.append(float(np.max(np.abs(z - 1.0))))
    return out


def main():
    t0 = time.time()
    data: dict = {"zeta": [], "gamma": [], "log_gamma": [], "em_oracle": [],
                  "zeta_smoothed": []}
    for sig, t in ZETA_POINTS:
        data["zeta"].append([sig, t, *cplx(mp.zeta(mp.mpc(sig, t)))])
    for x, y in GAMMA_POINTS:
        data["gamma"].append([x, y, *cplx(mp.gamma(mp.mpc(x, y)))])
        data["log_gamma"].append([x, y, *cplx(mp.loggamma(mp.mpc(x, y)))])
    for sig, t in [(0.75, 100), (0.6, 250)]:
        N = 2 * max(20, math.ceil(1.3 * (1 + abs(t))))
        data["em_oracle"].append([sig, t, *cplx(em_oracle(mp.mpc(sig, t), N, 20))])
    for sig, t, H, n_max in [(2, 0, 1, 60), (0.75, 50, 10, 1000), (0.9, 300, 40, 3000)]:
        s = mp.mpc(sig, t)
        val = mp.fsum(mp.power(n, -s) * mp.exp(-mp.mpf(n) / H) for n in range(1, n_max + 1))
        data["zeta_smoothed"].append([sig, t, H, n_max, *cplx(val)])
    data["zeta_3_2"] = float(mp.zeta(1.5))
    data["gamma_1_plus_i_abs"] = float(mp.sqrt(mp.pi / mp.sinh(mp.pi)))
    print(f"special values done in {time.time() - t0:.1f}s")

    # coarse brute-force version of the reference scan
    step = 5.0
    taus = [100 + step * j for j in range(int(10_000 / step) + 1)]
    data["reference_scan_coarse"] = {
        "center": 0.75, "radius": 0.05, "T": 100.0, "H": 10_000.0, "step": step,
        "epsilon": 0.75, "boundary_points": 256,
        "distances": brute_distances(0.75, 0.05, taus)}
    print(f"reference scan oracle done in {time.time() - t0:.1f}s")

    step = 0.01
    taus = [5 + step * j for j in range(int(5 / step) + 1)]
    data["exp_shift_scan_coarse"] = {
        "center": 0.75, "radius": 0.05, "T": 5.0, "step": step, "epsilon": 0.75,
        "boundary_points": 256,
        "distances": brute_distances(0.75, 0.05, [math.exp(t) for t in taus])}
    print(f"exp-shift oracle done in {time.time() - t0:.1f}s")

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
