import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zetashift.errors import NumericRangeError, ValidationError
from zetashift.phi_shifts import (BUILTIN, PhiFunction, build_partition, check_axioms,
                                  growth_check, psi_of, scan_shifted)
from zetashift.universality import DiskDomain, ScanWindow, Target, disk_distances, scan_interval

from oracles import frozen

DISK = DiskDomain(0.75, 0.05)
ONE = Target.constant(1.0)
EXP = PhiFunction.parse("exp:1")
EXP2 = PhiFunction.parse("exppoly:base=e,coeffs=0,0,1")


# construction and parsing ----------------------------------------------------

def test_parse_grammar():
    assert EXP == PhiFunction.exp_poly(0, 1)
    assert PhiFunction.parse("poly:0,0,1") == BUILTIN["tau^2"]
    assert EXP2 == BUILTIN["e^(tau^2)"]
    d = PhiFunction.parse("doubleexp:alpha=2,beta=2,coeffs=0,0.05")
    assert d == BUILTIN["2^(2^(tau/20))"]
    assert PhiFunction.parse(d.describe()) == d
    for bad in ("poly:5", "poly:1,-1", "exppoly:coeffs=3", "wave:1", "exppoly:base=2",
                "exppoly:base=2,coeffs=0,1,junk=3", "exp:x"):
        with pytest.raises(ValidationError):
            PhiFunction.parse(bad)


@given(st.floats(0.1, 50))
def test_psi_closed_forms(tau):
    assert psi_of(EXP, tau) == pytest.approx(1.0)
    assert psi_of(EXP2, tau) == pytest.approx(2 * tau)
    assert psi_of(BUILTIN["tau^3"], tau) == pytest.approx(3 / tau)
    assert psi_of(BUILTIN["2^tau"], tau) == pytest.approx(math.log(2))


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_psi_positive_and_monotone(name):
    phi = BUILTIN[name]
    tau = np.linspace(10, 20, 200)
    psi = phi.psi(tau)
    assert np.all(psi > 0)
    d = np.diff(psi)
    if phi.family == "polynomial":
        assert np.all(d < 0)
    else:
        assert np.all(d >= -1e-12)


def test_psi_range_errors():
    with pytest.raises(ValidationError):
        psi_of(EXP, 0.0)
    with pytest.raises(ValidationError):
        psi_of(PhiFunction.polynomial(-5, 1), 2.0)   # phi < 0 before tau = 5


# axioms ------------------------------------------------------------------------

def test_axioms_exponential():
    r = check_axioms(EXP, 10)
    assert r.ok and r.axiom_i_ok
    assert r.axiom_i_constant == pytest.approx(math.e, rel=1e-12)
    assert r.axiom_ii_case == "increasing_bounded_step"
    assert r.axiom_ii_constants["step_sup"] == pytest.approx(0, abs=1e-12)
    assert r.axiom_ii_constants["A"] == pytest.approx(1.0)
    assert r.sampled_range == (10.0, 20.0)


def test_axioms_square():
    r = check_axioms(BUILTIN["tau^2"], 10)
    assert r.axiom_ii_case == "decreasing_lower_bounded"
    assert r.axiom_ii_constants["B"] == pytest.approx(2.0)
    assert r.ok


def test_axioms_exp_square():
    r = check_axioms(EXP2, 5)
    assert r.axiom_ii_case == "increasing_bounded_step"
    # psi(tau + 1/(2 tau)) - psi(tau) = 1/tau
    assert r.axiom_ii_constants["step_sup"] == pytest.approx(1 / 5, rel=1e-9)
    assert r.axiom_ii_constants["A"] <= 1
    assert r.fd_psi_max_rel_err < 1e-6


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_axioms_hold_for_builtins(name):
    r = check_axioms(BUILTIN[name], 10)
    assert r.ok, r.notes
    assert math.isfinite(r.axiom_i_constant)
    assert r.fd_psi_max_rel_err < 1e-5


def test_axioms_input_checks():
    with pytest.raises(ValidationError):
        check_axioms(EXP, 2)
    with pytest.raises(ValidationError):
        check_axioms(EXP, 10, samples=50)


# growth --------------------------------------------------------------------------

def test_growth_examples():
    g = growth_check(EXP, 10, 1)
    assert g.ok and g.min_ratio == pytest.approx(math.e, rel=1e-12)
    g = growth_check(EXP2, 5, 1)
    assert g.ok and g.min_ratio == pytest.approx(math.exp(1 + 1 / (4 * 10 ** 2)), rel=1e-9)
    g = growth_check(BUILTIN["tau^2"], 10, 2)
    assert g.ok and g.min_ratio == pytest.approx(4.0, rel=1e-12)


@pytest.mark.parametrize("name", sorted(BUILTIN))
@pytest.mark.parametrize("C", [1, 2, 5])
@pytest.mark.parametrize("T", [10, 100])
def test_growth_all_builtins(name, C, T):
    assert growth_check(BUILTIN[name], T, C).ok


def test_growth_rejects_bad_C():
    with pytest.raises(ValidationError):
        growth_check(EXP, 10, 0)


# partition -----------------------------------------------------------------------

def test_partition_unit_steps():
    r = build_partition(EXP, 10)
    assert r.K == 10
    assert r.points == [float(k) for k in range(10, 21)]
    assert r.endpoint_check == 0.0


def test_partition_exp_square():
    r = build_partition(EXP2, 10)
    assert abs(r.K - 300) <= 2
    assert abs(r.endpoint_check) <= 1 / 20
    assert all(b > a for a, b in zip(r.points, r.points[1:]))


@pytest.mark.parametrize("name", [n for n in sorted(BUILTIN) if BUILTIN[n].family != "polynomial"])
@pytest.mark.parametrize("T", [10, 37.5])
def test_partition_invariants(name, T):
    phi = BUILTIN[name]
    r = build_partition(phi, T)
    assert r.points[0] == T and r.points[-1] >= 2 * T > r.points[-2]
    assert abs(r.sum_check - r.endpoint_check) <= 1e-12 * max(1, T)
    assert 0 <= r.endpoint_check <= r.steps[-1]
    A = check_axioms(phi, T).axiom_ii_constants["A"]
    psi_T = r.psi_values[0]
    for k, p in enumerate(r.psi_values):
        assert p <= psi_T + k * A + 1e-12 * p
        assert p >= 1 / A - 1e-12


def test_partition_rejects_decreasing_psi():
    with pytest.raises(ValidationError):
        build_partition(BUILTIN["tau^2"], 10)
    with pytest.raises(NumericRangeError):
        build_partition(EXP2, 10, max_steps=50)


# shifted scans ---------------------------------------------------------------------

def test_identity_shift_equals_scan_interval():
    a = scan_shifted(BUILTIN["tau"], DISK, ONE, 50.0, 0.05, 0.75)
    b = scan_interval(DISK, ONE, ScanWindow(50.0, 50.0, 0.05), 0.75)
    assert np.array_equal(a.distances, b.distances)
    assert a.density == b.density and a.samples == b.samples


def test_shifted_vacuous_threshold():
    r = scan_shifted(EXP, DISK, ONE, 5.0, 0.01, 1e6)
    assert r.density == 1.0
    assert r.shifts[0] == pytest.approx(math.exp(5))


def test_exp_shift_matches_frozen_bruteforce():
    ref = frozen()["exp_shift_scan_coarse"]
    taus = ref["T"] + ref["step"] * np.arange(len(ref["distances"]))
    d = disk_distances(DISK, ONE, shifts=np.exp(taus))
    r = np.array(ref["distances"])
    assert np.max(np.abs(d - r) / r) < 2e-3
    assert np.mean(d < ref["epsilon"]) == np.mean(r < ref["epsilon"])


def test_shift_overflow():
    with pytest.raises(NumericRangeError):
        scan_shifted(EXP, DISK, ONE, 8.0, 0.01, 0.75)
