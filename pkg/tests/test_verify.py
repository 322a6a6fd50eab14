import pytest

from relaybounds import info, verify


def test_all_suites_pass():
    results = verify.run()
    failed = [(s, c.name, c.detail) for s, cs in results.items() for c in cs if not c.ok]
    assert not failed


@pytest.mark.parametrize("suite", ["delta", "thm3"])
def test_ln2_perturbation_is_detected(suite, monkeypatch):
    monkeypatch.setattr(info, "LN2", info.LN2 * 1.001)
    assert not verify.passed(verify.run([suite]))


def test_unaffected_suite_stays_green(monkeypatch):
    monkeypatch.setattr(info, "LN2", info.LN2 * 1.001)
    assert verify.passed(verify.run(["sphere"]))


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run(["nope"])
