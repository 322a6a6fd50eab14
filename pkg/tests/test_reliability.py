import math

import numpy as np
import pytest

from relaybounds import channels, info, reliability
from relaybounds.reliability import ScopeError

BSC = channels.make_bsc(0.2)
BAC = channels.make_bac(0.01, 0.3)


def e0_linear(rho, px, w):
    """Direct E0 in linear arithmetic; fine for moderate rho."""
    s = 1 / (1 + rho)
    inner = (px[:, None] * w ** s).sum(axis=0)
    return -math.log2((inner ** (1 + rho)).sum())


@pytest.mark.parametrize("rho", [-0.9, -0.5, -0.1])
def test_e0_log_domain_matches_linear(rho):
    px = np.array([0.4, 0.6])
    for spec in (BSC, BAC):
        assert reliability.e0(rho, px, spec.link) == pytest.approx(
            e0_linear(rho, px, spec.link), abs=1e-12)


def test_e0_near_minus_one_is_finite():
    val = reliability.e0(-1 + 1e-6, np.array([0.5, 0.5]), BAC.link)
    assert math.isfinite(val)


@pytest.mark.parametrize("rho", [-1.0, 0.0, 0.3, -1.5])
def test_e0_domain(rho):
    with pytest.raises(info.DomainError):
        reliability.e0(rho, np.array([0.5, 0.5]), BSC.link)


@pytest.mark.parametrize("spec", [BSC, BAC])
def test_exponent_basic_properties(spec):
    c = channels.capacity_xy(spec).value
    assert reliability.error_exponent(c, spec) <= 1e-4
    rates = np.linspace(c, 1.0, 40)
    e = reliability.error_exponent(rates, spec)
    assert np.all(np.diff(e) >= -1e-12)
    assert np.all(np.diff(e, 2) >= -1e-9)  # convex in R
    assert np.all(e <= rates - c + 1e-12)
    below = reliability.error_exponent(np.linspace(0, c, 5), spec)
    assert np.all(below <= 1e-4)


@pytest.mark.parametrize("spec", [BSC, BAC])
def test_alternative_form_agrees(spec):
    c = channels.capacity_xy(spec).value
    rates = c + np.linspace(0.0125, 0.25, 20)
    e = reliability.error_exponent(rates, spec)
    alt = reliability.exponent_alt_form(rates, spec)
    assert np.max(np.abs(e - alt)) <= 0.01


def test_inverse_roundtrip():
    rf = reliability.reliability_function(BAC)
    for y in (0.01, 0.05951, 0.1):
        r = rf.inverse(y)
        assert rf(r) == pytest.approx(y, abs=1e-6)
    assert rf.inverse(0.0) == pytest.approx(rf.capacity)
    r, sat = rf.inverse(50.0, full_output=True)
    assert sat and r == pytest.approx(1.0)
    with pytest.raises(info.DomainError):
        rf.inverse(-0.1)


def test_inverse_vectorized_matches_scalar():
    ys = np.array([0.0, 0.02, 0.2])
    vec = reliability.inverse_exponent(ys, BSC)
    assert vec == pytest.approx([reliability.inverse_exponent(float(y), BSC) for y in ys])


def test_cache_shares_tables():
    assert reliability.reliability_function(BSC) is reliability.reliability_function(
        channels.make_bsc(0.2, r0=0.3))


def test_ternary_uses_lattice():
    w = np.array([[0.8, 0.1, 0.1], [0.1, 0.8, 0.1], [0.1, 0.1, 0.8]])
    rf = reliability.reliability_function(w)
    assert rf(rf.capacity) <= 1e-3
    assert rf(rf.capacity + 0.2) > 0
    with pytest.raises(ScopeError):
        reliability.exponent_alt_form(1.0, w)


def test_curve_metadata():
    curve = reliability.exponent_curve(BSC, [0.3, 0.5])
    assert curve.values.shape == (2,)
    assert curve.meta["rho_points"] == reliability.RHO_POINTS
