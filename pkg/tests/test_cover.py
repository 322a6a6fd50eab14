import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaybounds import bounds, channels, cover, info


def mp_gap(p):
    """H(p*p) - H(p) in 60-digit arithmetic."""
    with mpmath.workdps(60):
        p = mpmath.mpf(p)
        h = lambda r: -(r * mpmath.log(r, 2) + (1 - r) * mpmath.log(1 - r, 2))
        return h(2 * p * (1 - p)) - h(p)


def test_values_at_0p2():
    b = cover.cover_bounds(0.2)
    assert b.hf_upper == pytest.approx(info.binary_entropy(0.32), abs=1e-14)
    assert b.cutset_lower == pytest.approx(0.182454, abs=1e-6)
    assert b.thm2_lower == pytest.approx(0.206469, abs=1e-5)
    assert b.thm3_lower == pytest.approx(0.249161, abs=1e-5)


@pytest.mark.parametrize("p", [0.4999, 0.5 - 1e-6, 0.3, 0.26, 0.1, 1e-6])
def test_gap_without_cancellation(p):
    assert cover.cutset_lower(p) == pytest.approx(float(mp_gap(p)), rel=1e-9)


def test_thm3_limit():
    target = 1 / (8 * math.log(2))
    errs = [abs(cover.thm3_lower(0.5 - 10.0 ** -k) - target) for k in range(3, 7)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-4
    assert cover.limits()["p->1/2"]["thm3_lower"] == pytest.approx(target)


def test_ratio_tends_to_two():
    r = [cover.hf_cs_ratio(10.0 ** -k) for k in range(3, 10)]
    assert all(a > b for a, b in zip(r, r[1:]))
    assert abs(r[-1] - 2) < 0.07


def test_thm1_agrees_with_general_critical_rate():
    for p in (0.05, 0.2, 0.35):
        assert cover.thm1_lower(p) == pytest.approx(
            bounds.theorem1_critical(channels.make_bsc(p)).r0, abs=1e-9)


def test_thm2_lower_is_where_thm2_bound_saturates():
    # just above R0* lower bound, the thm2 bound reaches the broadcast cut; just below it does not
    r = cover.thm2_lower(0.2)
    cxyz = channels.capacity_xyz(channels.make_bsc(0.2)).value
    assert bounds.theorem2(channels.make_bsc(0.2, r + 2e-3)).value == pytest.approx(cxyz,
                                                                                   abs=1e-9)
    assert bounds.theorem2(channels.make_bsc(0.2, r - 2e-3)).value < cxyz - 1e-5


def test_endpoints_and_domain():
    assert cover.hf_upper(0.0) == 0.0 and cover.hf_upper(0.5) == 1.0
    assert cover.cutset_lower(0.5) == 0.0
    for bad in (0.0, 0.5, -0.1):
        with pytest.raises(info.DomainError):
            cover.thm3_lower(bad)


@given(st.floats(1e-6, 0.5 - 1e-6))
def test_ordering_property(p):
    assert cover.cover_bounds(p).ordered(tol=1e-12)
