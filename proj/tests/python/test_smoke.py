import pytest

import jspec


def test_hom_counts():
    assert jspec.count_hom((0, 0), (2, 2)) == 2
    assert jspec.count_hom((1, 0), (1, 1)) == 0
    assert len(jspec.enumerate_hom((1, 1), (2, 2))) == 4


def test_compose_and_decompose():
    standard = {"src": [1, 0], "dst": [2, 1], "phi": [1], "psi": [], "alpha": [1]}
    swap = {"src": [2, 1], "dst": [2, 1], "phi": [2, 1], "psi": [1], "alpha": []}
    f = jspec.compose(swap, standard)
    assert f["phi"] == [2]
    d = jspec.decompose(f)
    assert d["a"]["img"] == [2, 1]
    assert d["b"]["img"] == [1]
    assert d["p"] == 1


def test_equivalence_roundtrip():
    datum = jspec.random_tdatum((2, 2), seed=4)
    assert jspec.validate_tdatum(datum)["passed"]
    functor = jspec.tdatum_to_functor(datum)
    assert jspec.validate_functor(functor)["passed"]
    assert jspec.functor_to_tdatum(functor) == datum


def test_day_convolution_and_comparison():
    x = jspec.random_tdatum((2, 2), seed=1)
    y = jspec.random_tdatum((2, 2), seed=2)
    coend = jspec.day_convolve(x, y, (2, 2), classes=True)
    assert coend["schema"] == "coend.v1"
    assert all(c["representative"] == c["members"][0] for c in coend["classes"])
    assert jspec.compare_monoidal(x, y, (2, 2))["passed"]


def test_prolongation():
    spectrum = jspec.prolong(jspec.random_tdatum((2, 2), seed=3), ["a", "b"])
    assert spectrum["K"] == ["a", "b"]
    assert jspec.validate_spectrum(spectrum, 2)["passed"]


def test_components():
    comps = jspec.components((2, 2))
    assert sorted(set(comps.values())) == [-2, -1, 0, 1, 2]
    assert comps[(0, 1)] == comps[(1, 2)]
    assert jspec.components_dot((1, 1)).startswith("digraph J {")


def test_suite():
    reports = jspec.run_suite((1, 1), seed=2, samples=2)
    assert len(reports) == 10
    assert all(r["passed"] for r in reports)


def test_schema_errors():
    with pytest.raises(jspec.SchemaError) as err:
        jspec.validate_tdatum({"schema": "tdatum.v1"})
    assert "$.window" in str(err.value)
    with pytest.raises(ValueError):
        jspec.decompose('{"src": [0,0], "src": [0,0]}')
