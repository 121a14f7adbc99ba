"""Smoke tests of the python bindings against hand-checked values."""

import pytest

import alres


@pytest.fixture
def one_site():
    return alres.Potential(0, [1], [1])


def test_potential_fields(one_site):
    assert one_site.k == 0
    assert one_site.K == 0
    assert one_site.Q == 1
    assert one_site.degenerate_sites == [0]
    assert one_site.q_count(-3, 5) == 1


def test_potential_parsing():
    p = alres.Potential.from_json('{"k": -1, "r": [1, 0], "s": [1, 1]}')
    assert p.k == -1 and p.K == 0 and p.Q == 1
    with pytest.raises(alres.AlresError):
        alres.Potential.from_json('{"k": 0, "r": [2], "s": [0]}')
    with pytest.raises(alres.AlresError):
        alres.Potential(0, [], [])


def test_region_classification():
    assert alres.region_classify(2.0, 3.0) == "both-below"
    assert alres.region_classify(2.0, 1.0) == "w-above"
    assert alres.region_classify(0.5, 1.0) == "winv-above"
    assert alres.region_classify(2.0, 0.1) == "both-above"
    with pytest.raises(alres.AlresError):
        alres.region_classify(2.0, 2.0)


def test_describe(one_site):
    d = alres.describe(one_site)
    assert d["Q"] == 1
    # a(w) = [[w, 1], [1, 1/w]]
    assert d["a"][0][0]["num"] == [[1, 0, "1"]]
    assert d["a"][1][1]["num"] == [[-1, 0, "1"]]


def test_entry_values(one_site):
    e = alres.entry(one_site, "both-above", 0, 0)
    assert e["h_exp"] == 0
    # -(1/lambda) [[1/w, -1], [-1, (lambda+1) w]]: check the (1,1) slot
    assert e["matrix"][0][0] == {"den": [[0, 1, "1"]], "num": [[-1, 0, "-1"]]}

    # -(1/(w lambda)) at (2, 1) and -(lambda+1) w / lambda at (2, 1)
    v = alres.eval_entry(one_site, "both-above", 0, 0, w0=2.0, lambda0=1.0)
    assert abs(v[0][0] - (-0.5)) < 1e-12
    assert abs(v[1][1] - (-4.0)) < 1e-12


def test_expand(one_site):
    e = alres.expand(one_site)
    assert e["Q"] == 1
    assert len(e["residues"]) == 1
    assert e["regular"]["region"] == "both-above"

    zero = alres.Potential(0, [0], [0])
    assert alres.expand(zero)["residues"] == []


def test_verify(one_site):
    reports, ok = alres.verify(one_site)
    assert ok
    assert any(r["name"] == "hilbert" for r in reports)
    gating = [r for r in reports if r["gating"]]
    assert all(r["pass"] for r in gating)
