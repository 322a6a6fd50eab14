import math

import numpy as np
import pytest

from relaybounds import bounds, channels, info, reliability
from relaybounds.bounds import BROADCAST, MULTIPLE_ACCESS


def bsc_cxyz(p):
    return 1 + info.binary_entropy(info.binary_convolve(p, p)) - 2 * info.binary_entropy(p)


def test_zero_relay_rate_gives_direct_capacity():
    res = bounds.bsc_suite(0.2, 0.0)
    for b in res.values():
        assert b.value == pytest.approx(0.278072, abs=1e-6)


def test_large_relay_rate_gives_broadcast_capacity():
    res = bounds.bsc_suite(0.2, 0.25)
    for b in res.values():
        assert b.value == pytest.approx(bsc_cxyz(0.2), abs=1e-9)


@pytest.mark.parametrize("r0", [0.15, 0.18])
def test_bsc_ordering_and_witnesses(r0):
    res = bounds.bsc_suite(0.2, r0)
    v = [res[n].value for n in ("thm2", "thm1", "xue", "cutset")]
    assert all(a <= b + 1e-12 for a, b in zip(v, v[1:]))
    # the reported value is the min of constraints re-evaluated at the witness
    for name, b in res.items():
        cons = bounds.constraint_values(name, channels.make_bsc(0.2, r0), b.witness_px,
                                        b.witness_a)
        assert b.value == pytest.approx(min(cons.values()), abs=1e-12)
        assert cons[b.active_constraint] == pytest.approx(b.value, abs=1e-12)


def test_cutset_closed_form():
    p, r0 = 0.2, 0.15
    b = bounds.cutset(channels.make_bsc(p, r0))
    assert b.value == pytest.approx(1 - info.binary_entropy(p) + r0, abs=1e-12)
    assert b.active_constraint == MULTIPLE_ACCESS


@pytest.mark.parametrize("r0", [0.12, 0.18])
def test_general_grid_matches_bsc_fast_path(r0):
    spec = channels.make_bsc(0.2, r0)
    for fn in (bounds.cutset, bounds.theorem1, bounds.theorem2):
        fast = fn(spec)
        slow = fn(spec, method=bounds.GENERAL_GRID)
        assert fast.method == bounds.BSC_CLOSED_FORM
        assert slow.value == pytest.approx(fast.value, abs=1e-6)


def test_theorem2_reduces_to_cutset_on_erasure_link():
    spec = channels.make_bec(0.3, r0=0.2)
    t2 = bounds.theorem2(spec)
    cs = bounds.cutset(spec)
    assert t2.value == pytest.approx(cs.value, abs=1e-6)


def test_bac_bounds_below_cutset():
    spec = channels.make_bac(0.01, 0.3, 0.26)
    res = bounds.all_bounds(spec)
    cs = res["cutset"].value
    for name in ("xue", "thm1", "thm2"):
        assert res[name].value <= cs + 1e-9
    assert res["thm1"].value < cs


def test_xue_without_amendment_can_exceed_broadcast_cut():
    spec = channels.make_bsc(0.2, 0.25)
    raw = bounds.xue(spec, amend=False)
    amended = bounds.xue(spec)
    assert amended.value <= raw.value + 1e-12
    assert amended.value == pytest.approx(bsc_cxyz(0.2), abs=1e-9)
    assert BROADCAST not in raw.constraints


def test_thm1_slack_helpers():
    assert bounds.thm1_a_cap(2) == pytest.approx(1 / (2 * math.log(2)))
    s = bounds.blowup_radius(0.01)
    assert s == pytest.approx(math.sqrt(0.01 * math.log(2) / 2))
    assert bounds.thm1_slack(0.0, 2) == 0.0


def test_first_crossing():
    a = bounds.first_crossing(lambda x: np.asarray(x) ** 2, 0.25, 1.0, step=1e-3)
    assert a == pytest.approx(0.5, abs=1e-12)
    assert bounds.first_crossing(lambda x: np.asarray(x) + 1, 0.5, 1.0) == 0.0
    with pytest.raises(ArithmeticError):
        bounds.first_crossing(lambda x: np.asarray(x), 2.0, 1.0, step=1e-3)
    with pytest.raises(ArithmeticError):
        bounds.first_crossing(lambda x: np.sin(20 * np.asarray(x)), 0.5, 1.0, step=1e-3,
                              check_unimodal=True)


def test_xue_critical_consistency():
    spec = channels.make_bac(0.01, 0.3)
    crit = bounds.xue_critical(spec)
    m = spec.output_size
    assert float(bounds.xue_target(crit.a, m)) == pytest.approx(crit.exponent, abs=1e-9)
    # at that a the inverse exponent returns the target rate
    assert reliability.inverse_exponent(float(bounds.xue_target(crit.a, m)), spec) == \
        pytest.approx(crit.rate, abs=1e-6)


def test_theorem1_critical_on_bsc():
    crit = bounds.theorem1_critical(channels.make_bsc(0.2))
    assert crit.px[0] == pytest.approx(0.5, abs=1e-6)
    gap = crit.rate - crit.mi_xy
    assert float(bounds.thm1_slack(crit.a, 2)) == pytest.approx(gap, abs=1e-9)
