from math import comb

import pytest

from hosoya.chem import (
    SUSPECT_SPOTS,
    Family,
    FamilyParams,
    dendrimer,
    dendrimer_sequence,
    evaluate_family,
    polyphenyl,
    q_graph,
    spiro,
    spiro_even_hyper_wiener,
    triangulane,
    triangulane_g_hosoya_stated,
    triangulane_sequence,
)
from hosoya.construct import cycle_hosoya
from hosoya.errors import InvalidParams
from hosoya.graph import hosoya_bruteforce
from hosoya.poly import Method, Polynomial


def _consistent(result):
    assert result.oracle_match is True
    assert result.closed_form == hosoya_bruteforce(result.graph)
    assert result.closed_form.coefficient_sum() == comb(result.graph.n, 2)
    assert result.report.method is Method.FAMILY


def test_q_example():
    r = q_graph(6, 4)
    assert r.graph.n == 24
    assert r.closed_form == Polynomial([0, 51, 90, 135])
    assert r.report.wiener == 636
    assert not r.discrepancies
    _consistent(r)


@pytest.mark.parametrize("m", range(3, 7))
@pytest.mark.parametrize("n", range(3, 6))
def test_q_wiener_symmetric(m, n):
    assert q_graph(m, n).report.wiener == q_graph(n, m).report.wiener


def test_q_smallest():
    _consistent(q_graph(3, 2))


def test_spiro_fig_example():
    r = spiro(6, 2, 5)
    assert r.graph.n == 26
    _consistent(r)


@pytest.mark.parametrize("q", range(3, 9))
def test_single_cycle_spiro(q):
    assert spiro(q, 1, 1).closed_form == cycle_hosoya(q)


def test_spiro_coefficient_sum():
    assert spiro(5, 2, 3).closed_form.coefficient_sum() == comb(13, 2)


@pytest.mark.parametrize("q", [3, 5, 7])
@pytest.mark.parametrize("k", range(1, 6))
def test_odd_spiro_displays_hold(q, k):
    for h in range(1, q // 2 + 1):
        r = spiro(q, h, k)
        assert not r.discrepancies
        assert not r.notes


@pytest.mark.parametrize("q", [4, 6, 8])
def test_even_spiro_hyper_wiener_display_is_flagged(q):
    r = spiro(q, 1, 3)
    _consistent(r)
    flagged = [c for c in r.checks if not c.ok]
    assert [c.suspect for c in flagged] == ["even-spiro-ww"]
    assert any(n.startswith("[even-spiro-label]") for n in r.notes)
    assert r.report.hyper_wiener == spiro_even_hyper_wiener(q // 2, 1, 3)


@pytest.mark.parametrize("q", [4, 6, 8])
@pytest.mark.parametrize("k", range(1, 6))
def test_derived_even_hyper_wiener(q, k):
    for h in range(1, q // 2 + 1):
        assert spiro(q, h, k).report.hyper_wiener == spiro_even_hyper_wiener(q // 2, h, k)


def test_polyphenyl_fig_example():
    r = polyphenyl(6, 2, 5)
    assert r.graph.n == 30
    _consistent(r)
    assert not r.discrepancies


@pytest.mark.parametrize("h", [1, 2, 3])
def test_single_hexagon_polyphenyl(h):
    r = polyphenyl(6, h, 1)
    assert r.closed_form == Polynomial([0, 6, 6, 3])
    assert r.report.wiener == 27
    assert not r.discrepancies


@pytest.mark.parametrize("q", [4, 5, 8])
@pytest.mark.parametrize("k", range(1, 5))
def test_polyphenyl_general_q(q, k):
    for h in range(1, q // 2 + 1):
        r = polyphenyl(q, h, k)
        _consistent(r)
        assert not r.checks  # displays exist only for hexagons


def test_dendrimer_first_generation():
    r = dendrimer(1)
    assert r.report.wiener == 666
    assert r.report.hyper_wiener == 1932
    assert r.graph.n == 19
    assert not r.discrepancies
    assert any("[dendrimer-666]" in n for n in r.notes)
    assert dendrimer_sequence(1)[0][0] == Polynomial([0, 7, 8, 5, 1])
    _consistent(r)


@pytest.mark.parametrize("k", [2, 3])
def test_dendrimer_within_cap(k):
    r = dendrimer(k)
    _consistent(r)
    assert not r.discrepancies
    assert r.graph.n == {2: 76, 3: 190}[k]


def test_dendrimer_vertex_count_relation():
    d3 = dendrimer(3)
    assert d3.graph.n == 3 * 64 - 2


def test_dendrimer_beyond_cap_uses_closed_form_only():
    r = dendrimer(9, cap=3)
    assert r.graph is None and r.oracle_match is None
    assert not r.discrepancies
    hs, rs = dendrimer_sequence(9)
    assert r.closed_form == hs[-1] * 3 + rs[-1] * rs[-1] * 3


def test_triangulane_examples():
    assert triangulane_sequence(1)[0] == Polynomial([0, 3])
    r = triangulane(2)
    assert r.report.wiener == 678
    assert r.graph.n == 21
    assert not r.discrepancies
    assert any("[triangulane-n]" in n for n in r.notes)
    _consistent(r)


@pytest.mark.parametrize("k", range(1, 7))
def test_triangulane_recurrence_matches_rational_form(k):
    assert triangulane_sequence(k)[-1] == triangulane_g_hosoya_stated(k)
    r = triangulane(k)
    _consistent(r)
    assert not r.discrepancies


def test_triangulane_large_k_exact():
    r = triangulane(40, cap=0)
    n = 40
    assert r.report.wiener == 2 ** (2 * n + 1) * 3 * (6 * n - 7) + 2**n * 51 - 6
    assert not r.discrepancies


def test_env_cap(monkeypatch):
    monkeypatch.setenv("HOSOYA_CAP", "1")
    assert triangulane(2).graph is None
    monkeypatch.setenv("HOSOYA_CAP", "nope")
    with pytest.raises(InvalidParams):
        triangulane(2)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(family="spiro", q=6, h=4, k=2),
        dict(family="spiro", q=2, h=1, k=2),
        dict(family="polyphenyl", q=6, h=0, k=2),
        dict(family="polyphenyl", q=6, h=1, k=0),
        dict(family="q", m=2, n=3),
        dict(family="q", m=3, n=1),
        dict(family="dendrimer", k=0),
        dict(family="triangulane"),
    ],
)
def test_invalid_params(kwargs):
    with pytest.raises(InvalidParams):
        FamilyParams(**kwargs)


def test_params_json_round_trip():
    p = FamilyParams(Family.SPIRO, q=7, h=3, k=4)
    assert FamilyParams.from_json(p.to_json()) == p
    assert p.r == 3


def test_result_json_uses_decimal_strings():
    out = evaluate_family(FamilyParams("triangulane", k=30), cap=0).to_json()
    assert isinstance(out["wiener"], str) and int(out["wiener"]) > 2**60
    assert all(isinstance(c, str) for c in out["hosoya"])
    assert out["materialized"] is False


def test_every_suspect_spot_is_exercised():
    seen = set()
    for r in (spiro(6, 2, 3), polyphenyl(6, 2, 3), triangulane(3), dendrimer(1)):
        seen |= {c.suspect for c in r.checks if c.suspect}
    assert seen == set(SUSPECT_SPOTS)
