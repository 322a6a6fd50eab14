import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaybounds import info
from relaybounds.info import DimensionError, DomainError


def dist(k):
    return st.lists(st.floats(0.0, 1.0), min_size=k, max_size=k).filter(
        lambda v: sum(v) > 1e-3).map(lambda v: np.array(v) / sum(v))


def channel(k, m):
    return st.lists(dist(m), min_size=k, max_size=k).map(np.array)


def test_binary_entropy_values():
    assert info.binary_entropy(0.5) == pytest.approx(1.0)
    assert info.binary_entropy(0.0) == 0.0
    assert info.binary_entropy(1.0) == 0.0
    # -0.2 log2 0.2 - 0.8 log2 0.8 written out
    assert info.binary_entropy(0.2) == pytest.approx(
        -0.2 * math.log(0.2) / math.log(2) - 0.8 * math.log(0.8) / math.log(2), abs=1e-15)


def test_binary_entropy_vectorized():
    out = info.binary_entropy(np.array([0.1, 0.9]))
    assert out.shape == (2,)
    assert out[0] == pytest.approx(out[1])


@pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan")])
def test_binary_entropy_domain(bad):
    with pytest.raises(DomainError):
        info.binary_entropy(bad)


def test_bsc_mutual_information_closed_form():
    p = 0.11
    w = np.array([[1 - p, p], [p, 1 - p]])
    assert info.mutual_information([0.5, 0.5], w) == pytest.approx(1 - info.binary_entropy(p))


def test_renormalization_and_rejection():
    p = info.check_distribution([0.5, 0.5 + 5e-10])
    assert p.sum() == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DomainError):
        info.check_distribution([0.5, 0.6])
    with pytest.raises(DomainError):
        info.check_channel([[0.5, 0.6], [0.5, 0.5]])
    with pytest.raises(DimensionError):
        info.mutual_information([1.0], np.eye(2))


def test_relative_entropy_absolute_continuity():
    w = np.array([[1.0, 0.0], [0.5, 0.5]])
    wt = np.array([[0.9, 0.1], [0.5, 0.5]])
    assert info.conditional_relative_entropy([0.5, 0.5], wt, w) == math.inf
    assert info.conditional_relative_entropy([0.0, 1.0], wt, w) == 0.0


def test_binary_convolve_and_product_channel():
    assert info.binary_convolve(0.2, 0.2) == pytest.approx(0.32)
    w = np.array([[0.9, 0.1], [0.3, 0.7]])
    w2 = info.product_channel(w)
    assert w2.shape == (2, 4)
    assert w2[1, 0 * 2 + 1] == pytest.approx(0.3 * 0.7)
    np.testing.assert_allclose(w2.sum(axis=1), 1.0)


def test_ball_exponent():
    assert info.ball_exponent(0.75, 4) == pytest.approx(2.0)
    assert info.ball_exponent(0.9, 2) == pytest.approx(1.0)
    assert info.ball_exponent(0.2, 3) == pytest.approx(info.binary_entropy(0.2) + 0.2)


def test_log2_follows_constant(monkeypatch):
    assert info.log2(8.0) == pytest.approx(3.0)
    monkeypatch.setattr(info, "LN2", 1.0)
    assert info.log2(math.e) == pytest.approx(1.0)


@given(dist(3), channel(3, 4))
def test_mutual_information_bounds(px, w):
    mi = info.mutual_information(px, w)
    assert -1e-12 <= mi <= min(info.entropy(px), math.log2(4)) + 1e-9
    # I = H(Y) - H(Y|X)
    assert mi == pytest.approx(max(info.entropy(px @ w) - info.conditional_entropy(px, w), 0),
                               abs=1e-9)


@given(dist(3), channel(3, 3), channel(3, 3))
def test_relative_entropy_nonnegative(px, a, b):
    b = 0.5 * a + 0.5 * b  # keeps a dominated by b
    assert info.conditional_relative_entropy(px, a, b) >= 0.0


@given(dist(2), channel(2, 3))
def test_product_channel_data_processing(px, w):
    assert (info.mutual_information(px, info.product_channel(w))
            >= info.mutual_information(px, w) - 1e-12)
