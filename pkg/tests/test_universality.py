import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetashift.errors import NumericRangeError, ValidationError
from zetashift.special import zeta
from zetashift.universality import (DiskDomain, ScanWindow, Target, curve_from_distances,
                                    density_curve, disk_distances, merge_scans,
                                    scan_interval, step_halving_check, sup_distance)

from oracles import frozen

DISK = DiskDomain(0.75, 0.05)
ONE = Target.constant(1.0)


def mp_sup(center, radius, tau, f, P=256):
    best = 0.0
    for k in range(P):
        s = mp.mpc(center, tau) + radius * mp.expjpi(2 * mp.mpf(k) / P)
        best = max(best, float(abs(mp.zeta(s) - f(complex(s)))))
    return best


# domain types ---------------------------------------------------------------

@pytest.mark.parametrize("c,r", [(0.55, 0.05), (0.95, 0.05), (0.75, 0.3), (0.75, 0.0), (0.75, -0.1)])
def test_disk_must_sit_inside_strip(c, r):
    with pytest.raises(ValidationError):
        DiskDomain(c, r)


def test_scan_window_rules():
    w = ScanWindow(0.0, 1.0, 0.1)
    assert len(w.taus()) == 11 and w.taus()[-1] == pytest.approx(1.0)
    for args in [(-1, 1, 0.05), (0, 0, 0.05), (0, 1, 0.2), (0, 0.01, 0.05)]:
        with pytest.raises(ValidationError):
            ScanWindow(*args)


def test_target_kinds_and_parse():
    assert Target.parse("const:1.0") == ONE
    p = Target.parse("poly:1,2")
    assert p.kind == "polynomial"
    assert p(0.5 + 0j) == pytest.approx(2.0)
    e = Target.parse("exppoly:0,1j")
    assert e(2.0) == pytest.approx(np.exp(2j))
    for bad in ("const:1,2", "wave:1", "poly:", "const"):
        with pytest.raises(ValidationError):
            Target.parse(bad)


def test_nonvanishing_check():
    assert ONE.check_nonvanishing(DISK) == pytest.approx(1.0)
    with pytest.raises(ValidationError):
        Target.parse("poly:-0.75,1").check_nonvanishing(DISK)   # zero at the centre
    with pytest.raises(ValidationError):
        scan_interval(DISK, Target.parse("poly:-0.75,1"), ScanWindow(0, 1, 0.1), 1.0)
    assert Target.parse("exppoly:-100").check_nonvanishing(DISK) > 0


# sup distance ---------------------------------------------------------------

def test_identity_target_distance_zero():
    assert sup_distance(0.0, DISK, zeta) <= 1e-9
    assert sup_distance(0.0, DiskDomain(0.8, 0.05), zeta) <= 1e-9


def test_centre_08_example_against_mpmath():
    disk = DiskDomain(0.8, 0.05)
    got = sup_distance(0.0, disk, ONE)
    ref = mp_sup(0.8, 0.05, 0.0, lambda s: 1.0)
    assert got == pytest.approx(ref, rel=1e-3)
    # |zeta(0.75) - 1| sits inside the disk, so the boundary max exceeds it
    assert got > abs(zeta(0.75) - 1)


@pytest.mark.parametrize("tau", [37.5, 1234.25, 2500.0])
def test_sup_distance_against_mpmath(tau):
    got = sup_distance(tau, DISK, ONE)
    ref = mp_sup(0.75, 0.05, tau, lambda s: 1.0)
    assert got == pytest.approx(ref, rel=1e-3)


def test_sample_doubling_converges():
    for tau in (0.0, 150.0, 5000.0):
        a = sup_distance(tau, DISK, ONE, boundary_samples=64)
        b = sup_distance(tau, DISK, ONE, boundary_samples=128)
        assert abs(a - b) <= 1e-3 * b


def test_boundary_sample_floor_and_range():
    with pytest.raises(ValidationError):
        sup_distance(0.0, DISK, ONE, boundary_samples=8)
    with pytest.raises(NumericRangeError):
        sup_distance(2e6, DISK, ONE)


def test_fast_path_matches_frozen_bruteforce():
    ref = frozen()["reference_scan_coarse"]
    d = disk_distances(DISK, ONE, uniform=(ref["T"], ref["step"], len(ref["distances"])))
    r = np.array(ref["distances"])
    assert np.max(np.abs(d - r) / r) < 2e-3
    assert np.mean(d < ref["epsilon"]) == np.mean(r < ref["epsilon"])


# scans --------------------------------------------------------------------

def test_scan_thresholds():
    w = ScanWindow(200.0, 20.0, 0.1)
    big = scan_interval(DISK, ONE, w, 1e6)
    assert big.density == 1.0 and big.samples == 201
    tiny = scan_interval(DISK, ONE, w, 1e-12)
    assert tiny.density == 0.0
    assert big.best_distance == float(np.min(big.distances))
    assert big.best_tau == big.taus[np.argmin(big.distances)]
    assert big.measure == pytest.approx(20.0)


def test_density_curve_monotone_and_matches_reruns():
    w = ScanWindow(300.0, 30.0, 0.1)
    eps = [0.1, 0.5, 1.0, 5.0]
    curve = density_curve(DISK, ONE, w, eps)
    dens = [d for _, d in curve]
    assert dens == sorted(dens)
    for e, d in curve:
        assert scan_interval(DISK, ONE, w, e).density == d
    top = scan_interval(DISK, ONE, w, 1.0).distances.max()
    assert density_curve(DISK, ONE, w, [0.5, top + 1])[-1][1] == 1.0


def test_curve_rejects_unsorted():
    with pytest.raises(ValidationError):
        curve_from_distances(np.array([1.0, 2.0]), [0.5, 0.1])


@settings(max_examples=50)
@given(st.lists(st.floats(0, 10), min_size=1, max_size=50),
       st.lists(st.floats(0.001, 10), min_size=1, max_size=10))
def test_curve_monotone_property(dist, eps):
    curve = curve_from_distances(np.array(dist), sorted(eps))
    dens = [d for _, d in curve]
    assert all(0 <= d <= 1 for d in dens)
    assert dens == sorted(dens)


def test_window_additivity():
    T, H, step, eps = 500.0, 20.0, 0.05, 1.0
    whole = scan_interval(DISK, ONE, ScanWindow(T, H, step), eps)
    a = scan_interval(DISK, ONE, ScanWindow(T, H / 2, step), eps)
    b = scan_interval(DISK, ONE, ScanWindow(T + H / 2, H / 2, step), eps)
    acc, n = merge_scans(a, b)
    assert n == whole.samples
    assert acc == whole.accepted


def test_shift_consistency():
    eps = 1.0
    direct = scan_interval(DISK, ONE, ScanWindow(700.0, 10.0, 0.05), eps)
    pre = scan_interval(DISK, ONE, ScanWindow(0.0, 10.0, 0.05), eps, offset=700.0)
    assert np.allclose(direct.distances, pre.distances, rtol=1e-12, atol=0)
    assert direct.accepted == pre.accepted


def test_step_halving_small_window():
    base = scan_interval(DISK, ONE, ScanWindow(1000.0, 50.0, 0.05), 0.75)
    chk = step_halving_check(base, DISK, ONE)
    finer = scan_interval(DISK, ONE, ScanWindow(1000.0, 50.0, 0.025), 0.75)
    assert chk.density_half == pytest.approx(finer.density, abs=1e-12)
    assert chk.delta < 0.05
