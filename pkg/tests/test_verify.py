import pytest

from hosoya.verify import MUTATIONS, run_verify


@pytest.fixture(scope="module")
def default_report():
    return run_verify()


def test_default_run_passes(default_report):
    assert default_report.passed
    assert all(g.checked > 0 for g in default_report.groups)


def test_findings_cover_suspect_spots(default_report):
    by_suspect = {}
    for f in default_report.discrepancies:
        by_suspect.setdefault(f.suspect, []).append(f)
    ww = by_suspect["even-spiro-ww"][0]
    assert ww.kind == "value" and ww.mismatched == ww.tuples >= 3
    assert all(f.kind == "notation" and f.tuples >= 3 and f.mismatched == 0 for f in by_suspect["triangulane-n"])
    assert {"even-spiro-label", "polyphenyl-paren"} <= by_suspect.keys()
    (confirm,) = default_report.confirmations
    assert confirm.suspect == "dendrimer-666" and confirm.mismatched == 0


def test_unregistered_displays_all_agree(default_report):
    assert all(f.mismatched == 0 for f in default_report.findings if f.suspect is None)


def test_mutation_is_caught_and_restored():
    report = run_verify(seed=3, trials=20, mutation="bouquet-identical")
    assert not report.passed
    failing = [g.name for g in report.groups if not g.passed]
    assert failing == ["construction formulas = brute force (all four kinds)"]
    assert run_verify(seed=3, trials=20).passed


def test_unknown_mutation():
    with pytest.raises(ValueError):
        run_verify(trials=1, mutation="nothing")
    assert "bouquet-identical" in MUTATIONS


def test_same_seed_same_json():
    assert run_verify(seed=11, trials=30).to_json() == run_verify(seed=11, trials=30).to_json()
