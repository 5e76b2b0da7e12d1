"""Composite Simpson quadrature with step halving on uniform grids.

Integrands are passed as *grid functions* ``f(t0, dt, M) -> array`` that
evaluate at ``t0 + j*dt`` for ``j < M``.  Halving reuses every previous
sample and only evaluates the new midpoints, which themselves form a
uniform grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

GridFunction = Callable[[float, float, int], np.ndarray]


@dataclass
class SimpsonResult:
    value: complex | float
    delta: float          # relative change on the last halving
    halvings: int
    n: int                # number of intervals in the final grid
    a: float
    b: float
    samples: np.ndarray   # integrand on the final grid, n + 1 values

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n


def simpson_weights(n: int) -> np.ndarray:
    if n % 2 or n <= 0:
        raise ValueError("Simpson needs a positive even number of intervals")
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def simpson(samples: np.ndarray, h: float):
    n = len(samples) - 1
    return h / 3.0 * np.dot(simpson_weights(n), samples)


def even_intervals(length: float, step: float, multiple: int = 1) -> int:
    """Smallest n >= length/step that is a multiple of 2*multiple."""
    unit = 2 * multiple
    n = int(np.ceil(length / step / unit - 1e-9)) * unit
    return max(unit, n)


def refine_simpson(f: GridFunction, a: float, b: float, n0: int, rtol: float,
                   max_halvings: int = 8, min_halvings: int = 1,
                   atol: float = 0.0) -> SimpsonResult:
    """Integrate f over [a, b], halving from n0 intervals until the relative
    change drops below rtol (or the absolute change below atol).

    If the tolerance is never met the last estimate is returned and its
    ``delta`` reports the final relative change.
    """
    n = n0
    h = (b - a) / n
    vals = np.asarray(f(a, h, n + 1))
    est = simpson(vals, h)
    delta = np.inf
    k = 0
    while k < max_halvings:
        mids = np.asarray(f(a + h / 2, h, n))
        new = np.empty(2 * n + 1, dtype=np.result_type(vals, mids))
        new[0::2] = vals
        new[1::2] = mids
        vals, n, h = new, 2 * n, h / 2
        new_est = simpson(vals, h)
        diff = abs(new_est - est)
        scale = abs(new_est)
        delta = diff / scale if scale > 0 else (0.0 if diff == 0 else np.inf)
        est = new_est
        k += 1
        if k >= min_halvings and (delta < rtol or diff <= atol):
            break
    return SimpsonResult(est, float(delta), k, n, a, b, vals)


def chunk_partials(res: SimpsonResult, chunks: int) -> list[tuple[float, float, float]]:
    """Split a finished Simpson integral into per-chunk partial integrals.

    Requires the final grid to contain the chunk boundaries (n divisible by
    2*chunks); the partials then sum, in chunk order, to ``res.value``.
    """
    n = res.n
    if n % (2 * chunks):
        raise ValueError("grid does not align with chunk boundaries")
    m = n // chunks
    h = res.h
    out = []
    for c in range(chunks):
        seg = res.samples[c * m: (c + 1) * m + 1]
        out.append((res.a + c * m * h, res.a + (c + 1) * m * h, simpson(seg, h)))
    return out
