"""One test group per acceptance criterion; run with -v to see the summary."""

import math
import random
import time
from fractions import Fraction as F

import numpy as np
import pytest

from zetashift.exponent_pairs import (HALF, NAMED_PAIRS, convex_combine, generate_pairs,
                                      log_exponent, lookup, optimize_theta, seed, sigma_bound,
                                      t_exponent)
from zetashift.errors import InfeasibleError
from zetashift.mean_square import (Window, lemma1_suite, mean_square, mv_majorant)
from zetashift.phi_shifts import BUILTIN, PhiFunction, build_partition, growth_check, scan_shifted
from zetashift.serialize import dumps
from zetashift.special import (STIRLING_T, STIRLING_X, complex_gamma, randomized_suite,
                               stirling_check, zeta)
from zetashift.universality import (DiskDomain, ScanWindow, Target, curve_from_distances,
                                    scan_interval, step_halving_check, sup_distance)

from oracles import theta_bruteforce

DISK = DiskDomain(0.75, 0.05)
ONE = Target.constant(1.0)
REFERENCE = dict(T=100.0, H=10_000.0, step=0.05, epsilon=0.75)
EXP_REFERENCE = dict(T=5.0, step=1e-3, epsilon=0.75)


def P(k, l):
    return seed(F(k), F(l))


# 1 ---------------------------------------------------------------------------

@pytest.mark.criterion(1, "exact exponent-pair constants")
def test_c1_exact_constants():
    t0 = time.perf_counter()
    lp = P("4/11", "6/11")
    hb = P("9/26", "7/13")
    assert t_exponent(lp, HALF) == F(1, 3) and log_exponent(lp) == F(26, 15)
    assert t_exponent(hb, HALF) == F(23, 70) and log_exponent(hb) == F(61, 35)
    assert sigma_bound(hb) == F(31, 52) and t_exponent(hb, F(31, 52)) == F(9, 35)
    b = t_exponent(P("13/84", "55/84"), HALF)
    assert b == F(34, 97) and b > F(1, 3)
    q = convex_combine(P("1/2", "1/2"), P("2/7", "4/7"), F(12, 33))
    assert (q.kappa, q.lam) == (F(4, 11), F(6, 11))
    assert time.perf_counter() - t0 < 1


# 2 ---------------------------------------------------------------------------

@pytest.mark.criterion(2, "derivation of (2/7,4/7) and the optimizer path")
def test_c2_derivation():
    t0 = time.perf_counter()
    ps = generate_pairs(3)
    baa = ps.get(F(2, 7), F(4, 7))
    assert baa is not None and baa.derivation == "B(A(A(SEED(1/2,1/2))))"
    best, th = optimize_theta(ps, HALF)
    assert (best.key[:2], th) == ((F(2, 7), F(4, 7)), F(1, 3))
    best, th = optimize_theta(generate_pairs(3, include_named=True), HALF)
    assert (best.key[:2], th) == ((F(9, 26), F(7, 13)), F(23, 70))
    assert time.perf_counter() - t0 < 5


# 3 ---------------------------------------------------------------------------

@pytest.mark.criterion(3, "ledger golden values, byte-stable JSON")
def test_c3_ledger():
    assert lookup("Theorem1").h_exponent == F(1273, 4053)
    assert lookup("zero-density").h_exponent == F(27, 82)
    assert lookup("Theorem4").h_exponent == "exp((log T)^(1-eps))"
    text = dumps(lookup("Theorem1"))
    assert '"h_exponent":"1273/4053"' in text
    assert text == dumps(lookup("Theorem1"))
    assert '"h_exponent":"exp((log T)^(1-eps))"' in dumps(lookup("Theorem4"))


# 4 ---------------------------------------------------------------------------

def random_pairs(rng: random.Random, n: int):
    out = []
    for _ in range(n):
        d1, d2 = rng.randint(1, 400), rng.randint(1, 400)
        k = F(rng.randint(0, d1 // 2), d1)
        lam = F(rng.randint(-(-d2 // 2), d2), d2)
        out.append(P(k, lam))
    return out


@pytest.mark.criterion(4, "hull optimizer equals brute force on 100 random sets")
def test_c4_optimizer_oracle():
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    sigmas = [F(1, 2), F(31, 52), F(3, 4)]
    closure = list(generate_pairs(6, include_named=True))
    for i in range(100):
        n = rng.choice([1, 2, 10, 100, 1000, rng.randint(1, 10_000)])
        pairs = random_pairs(rng, n)
        if i % 10 == 0:
            pairs += closure
        for sigma in sigmas:
            expected = theta_bruteforce(pairs, sigma)
            if expected is None:
                with pytest.raises(InfeasibleError):
                    optimize_theta(pairs, sigma)
                continue
            best, th = optimize_theta(pairs, sigma)
            assert th == expected[1]
            assert best.key == expected[0].key
    assert time.perf_counter() - t0 < 60


# 5 ---------------------------------------------------------------------------

@pytest.mark.criterion(5, "decomposition residuals < 1e-6 on the seeded suite")
def test_c5_decomposition_suite():
    reps = randomized_suite(seed=0, count=10)
    assert len(reps) == 10
    for r in reps:
        assert 0.6 <= r.s.sigma <= 0.9 and 50 <= r.s.t <= 500 and 10 <= r.H <= 100
        assert r.sigma0 == 0.5
        assert r.residual < 1e-6


# 6 ---------------------------------------------------------------------------

@pytest.mark.criterion(6, "special-function regression")
def test_c6_special_values():
    assert abs(zeta(2) - math.pi ** 2 / 6) < 1e-9
    assert abs(zeta(4) - math.pi ** 4 / 90) < 1e-9
    assert abs(zeta(0) + 0.5) < 1e-9
    for n in range(1, 11):
        assert abs(complex_gamma(n) - math.factorial(n - 1)) < 1e-9 * math.factorial(n - 1)
    assert abs(complex_gamma(0.5) - math.sqrt(math.pi)) < 1e-9


@pytest.mark.criterion(6, "special-function regression")
def test_c6_conjugate_symmetry():
    rng = np.random.default_rng(6)
    s = rng.uniform(-1, 2, 500) + 1j * rng.uniform(-1000, 1000, 500)
    a = zeta(np.conj(s))
    b = np.conj(zeta(s))
    assert np.all(np.abs(a - b) <= 1e-12 * np.maximum(1, np.abs(b)))
    g = complex_gamma(np.conj(s))
    h = np.conj(complex_gamma(s))
    assert np.all(np.abs(g - h) <= 1e-12 * np.abs(h))


@pytest.mark.criterion(6, "special-function regression")
def test_c6_stirling():
    assert stirling_check(STIRLING_X, STIRLING_T) <= 4


# 7 ---------------------------------------------------------------------------

@pytest.mark.criterion(7, "mean squares, Lemma 1 suite and majorant constants")
def test_c7_mean_square_sigma_one():
    r = mean_square(1.0, Window(1000.0, 1000.0))
    assert abs(r.value / (math.pi ** 2 / 6) - 1) < 0.10


@pytest.mark.criterion(7, "mean squares, Lemma 1 suite and majorant constants")
def test_c7_mean_square_three_quarters():
    r = mean_square(0.75, Window(5000.0, 2000.0))
    assert 0.8 <= r.value / float(zeta(1.5).real) <= 1.25


@pytest.mark.criterion(7, "mean squares, Lemma 1 suite and majorant constants")
def test_c7_lemma1_suite():
    res = lemma1_suite()
    assert len(res) == 20
    assert max(r.implied_constant for r in res) <= 10


@pytest.mark.criterion(7, "mean squares, Lemma 1 suite and majorant constants")
@pytest.mark.parametrize("sigma,H,T", [(0.75, 10.0, 1000.0), (0.6, 100.0, 1000.0),
                                       (0.9, 1.0, 500.0), (1.0, 50.0, 2000.0)])
def test_c7_mv_majorant(sigma, H, T):
    assert mv_majorant(sigma, H, T).constant <= 10


# 8 ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def reference_scan():
    w = ScanWindow(REFERENCE["T"], REFERENCE["H"], REFERENCE["step"])
    return scan_interval(DISK, ONE, w, REFERENCE["epsilon"])


@pytest.mark.criterion(8, "scanner properties and the reference scan")
def test_c8_reference_density_positive(reference_scan):
    assert reference_scan.samples == 200_001
    assert reference_scan.density > 0


@pytest.mark.criterion(8, "scanner properties and the reference scan")
def test_c8_density_monotone_in_epsilon(reference_scan):
    curve = curve_from_distances(reference_scan.distances, [0.05, 0.1, 0.25, 0.5, 0.75, 1, 2, 5, 50])
    dens = [d for _, d in curve]
    assert dens == sorted(dens) and dens[-1] == 1.0


@pytest.mark.criterion(8, "scanner properties and the reference scan")
def test_c8_identity_target():
    assert sup_distance(0.0, DISK, zeta) <= 1e-9


@pytest.mark.criterion(8, "scanner properties and the reference scan")
def test_c8_step_halving(reference_scan):
    chk = step_halving_check(reference_scan, DISK, ONE)
    assert chk.delta < 0.02


# 9 ---------------------------------------------------------------------------

@pytest.mark.criterion(9, "Phi-class growth, partitions and shifted scans")
def test_c9_growth_all_builtins():
    for phi in BUILTIN.values():
        for C in (1, 2, 5):
            for T in (10, 100):
                assert growth_check(phi, T, C).ok


@pytest.mark.criterion(9, "Phi-class growth, partitions and shifted scans")
def test_c9_partitions():
    r = build_partition(PhiFunction.parse("exp:1"), 10)
    assert r.K == 10 and r.points == [float(k) for k in range(10, 21)]
    r2 = build_partition(BUILTIN["e^(tau^2)"], 10)
    assert abs(r2.K - 300) <= 2
    for phi in BUILTIN.values():
        if phi.family == "polynomial":
            continue
        r = build_partition(phi, 10)
        assert abs(r.sum_check - r.endpoint_check) <= 1e-12


@pytest.mark.criterion(9, "Phi-class growth, partitions and shifted scans")
def test_c9_identity_shift():
    a = scan_shifted(BUILTIN["tau"], DISK, ONE, 100.0, 0.05, 0.75)
    b = scan_interval(DISK, ONE, ScanWindow(100.0, 100.0, 0.05), 0.75)
    assert np.array_equal(a.distances, b.distances) and np.array_equal(a.taus, b.taus)


@pytest.mark.criterion(9, "Phi-class growth, partitions and shifted scans")
def test_c9_exponential_shift_reference():
    r = scan_shifted(PhiFunction.parse("exp:1"), DISK, ONE, EXP_REFERENCE["T"],
                     EXP_REFERENCE["step"], EXP_REFERENCE["epsilon"])
    assert r.samples == 5001
    assert r.density > 0
