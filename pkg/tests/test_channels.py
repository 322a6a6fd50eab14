import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaybounds import channels, info
from relaybounds.channels import SpecError


def good_doc():
    return {"input_size": 2, "output_size": 2, "transition": [[0.8, 0.2], [0.2, 0.8]], "r0": 0.1}


def test_spec_roundtrip():
    spec = channels.spec_from_dict(good_doc())
    assert spec.bsc_crossover() == pytest.approx(0.2)
    again = channels.spec_from_dict(spec.to_dict())
    np.testing.assert_array_equal(again.link, spec.link)
    assert again.r0 == spec.r0


@pytest.mark.parametrize("mutate,field", [
    (lambda d: d.pop("r0"), "r0"),
    (lambda d: d.__setitem__("input_size", 1), "input_size"),
    (lambda d: d["transition"].pop(), "transition"),
    (lambda d: d["transition"][1].append(0.0), "transition[1]"),
    (lambda d: d["transition"][0].__setitem__(1, "x"), "transition[0][1]"),
    (lambda d: d.__setitem__("r0", -1), "r0"),
    (lambda d: d["transition"][0].__setitem__(1, 0.5), "transition"),
])
def test_spec_diagnostics(mutate, field):
    doc = good_doc()
    mutate(doc)
    with pytest.raises(SpecError) as exc:
        channels.spec_from_dict(doc)
    assert exc.value.field == field


def test_load_spec_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"input_size": 2,\n  "output_size" 2}')
    with pytest.raises(SpecError, match="line 2"):
        channels.load_spec(path)
    path.write_text(json.dumps(good_doc()))
    assert channels.load_spec(path).r0 == pytest.approx(0.1)


def test_link_is_read_only():
    spec = channels.make_bsc(0.2)
    with pytest.raises(ValueError):
        spec.link[0, 0] = 0.5


def test_bsc_and_bec_capacity():
    for p in (0.05, 0.2, 0.4):
        c = channels.capacity_xy(channels.make_bsc(p))
        assert c.value == pytest.approx(1 - info.binary_entropy(p), abs=1e-12)
        assert c.argmax_input[0] == pytest.approx(0.5, abs=1e-6)
    assert channels.capacity_xy(channels.make_bec(0.3)).value == pytest.approx(0.7, abs=1e-10)


def test_bsc_broadcast_capacity_closed_form():
    p = 0.2
    q = info.binary_convolve(p, p)
    expected = 1 + info.binary_entropy(q) - 2 * info.binary_entropy(p)
    assert channels.capacity_xyz(channels.make_bsc(p)).value == pytest.approx(expected, abs=1e-10)
    assert expected == pytest.approx(0.460526, abs=1e-6)


def test_blahut_arimoto_matches_alpha_grid():
    w = channels.make_bac(0.01, 0.3).link
    grid = channels.channel_capacity(w)
    ba = channels.blahut_arimoto(w)
    assert ba.value == pytest.approx(grid.value, abs=1e-9)
    np.testing.assert_allclose(ba.argmax_input, grid.argmax_input, atol=1e-4)


def test_ternary_capacity_symmetric():
    e = 0.1
    w = np.full((3, 3), e / 2) + np.eye(3) * (1 - 1.5 * e)
    c = channels.channel_capacity(w)
    assert c.method == "blahut_arimoto"
    h_row = info.entropy(w[0])
    assert c.value == pytest.approx(np.log2(3) - h_row, abs=1e-9)


@given(st.floats(0.01, 0.49), st.floats(0.01, 0.49))
def test_capacity_ordering(p1, p2):
    spec = channels.make_bac(p1, p2)
    cxy = channels.capacity_xy(spec).value
    cxyz = channels.capacity_xyz(spec).value
    assert 0 <= cxy <= cxyz + 1e-12 <= 1 + 1e-12
