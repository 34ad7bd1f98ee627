import json
import pathlib

import pytest

import hfitt

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_cone_and_cusp_singular_loci():
    r = hfitt.Ring(["x", "y", "z"])
    cone = hfitt.Scheme(r, ["z^2 - x*y"])
    assert hfitt.singular_locus(cone) == cone.coordinate_ring.ideal(["x", "y", "z"])
    r2 = hfitt.Ring(["x", "y"])
    cusp = hfitt.Scheme(r2, ["y^2 - x^3"])
    assert hfitt.singular_locus(cusp).generators() == ["x^2", "y"]


def test_axes_higher_singular_locus():
    r = hfitt.Ring(["x", "y", "z"])
    axes = hfitt.Scheme(r, ["x*y", "x*z", "y*z"])
    assert hfitt.singular_locus(axes).generators() == ["z^2", "y*z", "y^2", "x*z", "x*y", "x^2"]
    assert hfitt.higher_singular_locus(axes, 1, 3).generators() == ["z", "y", "x"]


def test_minors_and_determinant():
    r = hfitt.Ring(["a", "b", "c", "d"])
    m = r.matrix([["a", "b"], ["c", "d"]])
    assert hfitt.determinant(m) == "-b*c + a*d"
    assert hfitt.minors_ideal(m, 0).is_unit
    assert hfitt.minors_ideal(m, 3).is_zero
    assert hfitt.minors_ideal(m, 1).generators() == ["d", "c", "b", "a"]


def test_resolution_and_padding_invariance():
    r = hfitt.Ring(["x", "y"], field="GF(101)")
    res = hfitt.free_resolution(hfitt.Module(r.matrix([["x", "y"]])), 4)
    assert res.complex.ranks() == [1, 2, 1]
    assert not res.truncated
    padded = res.complex.padded(1, 2)
    for i in range(1, 4):
        for k in range(-2, 3):
            assert hfitt.fitting_ideal(res.complex, i, k) == hfitt.fitting_ideal(padded, i, k)
    assert hfitt.padding_is_quasi_iso(res.complex, 2, 1)
    unit = hfitt.free_resolution(hfitt.Module(r.matrix([["1", "x"], ["y", "x*y"]])), 3)
    assert hfitt.minimalize(unit).complex.ranks()[0] == 1


def test_brill_noether_and_liftable_rank():
    r = hfitt.Ring(["t"])
    e = hfitt.Complex(r, "cochain", 0, [3], [])
    assert hfitt.brill_noether_ideal(e, 2).is_zero
    assert hfitt.brill_noether_ideal(e, 3).is_unit
    assert hfitt.liftable_sections_rank(e) == 2
    jump = hfitt.Complex(r, "cochain", 0, [2, 1], [r.matrix([["t", "0"]])])
    assert hfitt.liftable_sections_rank(jump) is None


def test_errors_are_typed():
    r = hfitt.Ring(["x"])
    with pytest.raises(hfitt.ParseError):
        r.normal_form("x +")
    with pytest.raises(hfitt.InputError):
        hfitt.Complex(r, "chain", 0, [1, 1, 1], [r.matrix([["x"]]), r.matrix([["1"]])])
    with pytest.raises(hfitt.Error):
        hfitt.Ring(["x"], field="GF(4)")


def test_run_job_matches_fixture_and_is_deterministic():
    doc = (FIXTURES / "axes.job").read_text()
    first, code = hfitt.run_job(doc)
    second, _ = hfitt.run_job(doc)
    assert code == 0
    assert first == second
    results = {r["output"]: r for r in json.loads(first)["results"]}
    assert results["sing_1"]["value"] == ["z", "y", "x"]
    _, bad = hfitt.run_job("{}")
    assert bad == 2
