import json

import pytest

import _polarforge as pf

BOREL = "ring x y z\nx^2, x*y, x*z, y^2, y*z"
STABLE = "ring x y z\nx*y*z, x^2*y, x*y^2, x^3"


def test_polarize_box():
    out = pf.polarize(BOREL, method="box")
    assert out == (
        "polar 3 2 x y z\nx_1*x_2, x_1*y_2, x_1*z_2, y_1*y_2, y_1*z_2\n"
    )


def test_polarize_standard_and_depolarize():
    out = pf.polarize(BOREL, method="standard")
    assert "x_1*y_1" in out
    back = pf.depolarize(out)
    assert back == "ring x y z\nx^2, x*y, x*z, y^2, y*z\n"


def test_mixed_interpolates():
    n = 3
    assert pf.polarize(BOREL, method="mixed", A=[1, 2, 3]) == pf.polarize(
        BOREL, method="box"
    )
    assert pf.polarize(BOREL, method="mixed", A=[]) == pf.polarize(
        BOREL, method="standard"
    )


def test_betti():
    table = json.loads(pf.betti(BOREL))
    entries = {(e["i"], e["j"]): e["value"] for e in table}
    assert entries == {(0, 2): 5, (1, 3): 6, (2, 4): 2}


def test_hilbert():
    k = json.loads(pf.hilbert("ring x y\nx^2, x*y"))
    assert {(t["degree"], t["coeff"]) for t in k} == {(0, 1), (2, -2), (3, 1)}


def test_verify_verdicts():
    good = json.loads(pf.verify(BOREL))
    assert good["ok"] is True
    bad = json.loads(pf.verify(STABLE))
    assert bad["ok"] is False
    assert "witness" in bad


def test_filtration():
    f = json.loads(pf.filtration(BOREL))
    assert [s["adjoined"] for s in f["steps"]] == ["x", "y"]
    assert f["terminal"] == ["x_1", "y_1"]


def test_sigma():
    assert pf.sigma(BOREL, shift="id") == (
        "ring x1 x2 x3 x4\nx1*x2, x1*x3, x1*x4, x2*x3, x2*x4\n"
    )


def test_is_borel_and_closure():
    assert pf.is_borel(BOREL)
    assert not pf.is_borel(STABLE)
    assert pf.borel_closure("ring x y z\ny*z") == (
        "ring x y z\nx^2, x*y, x*z, y^2, y*z\n"
    )


def test_minimal_primes_and_shelling():
    primes = json.loads(pf.minimal_primes(pf.polarize(BOREL)))
    assert primes[0] == ["x_1", "y_1"]
    facets = pf.shelling(BOREL)
    assert facets[0] == ["x_2", "y_2", "z_1", "z_2"]


def test_random_borel_deterministic():
    a = pf.random_borel(seed=7, n=3)
    assert a == pf.random_borel(seed=7, n=3)
    assert pf.is_borel(a)


def test_parse_error():
    with pytest.raises(ValueError):
        pf.betti("ring x y\nx*q")
