import pytest

import cacti

PRODUCT = "root(w<1;0;0>()w<2;0;0>())"
DELTA = "root(w<1;1;0>())"


def test_enumerate_and_degree():
    cells = cacti.enumerate_cells(1, 1)
    assert sorted(cacti.degree(t) for t in cells) == [0, 1]
    assert cacti.normalize_tree(" root( w<1;0;0>() ) ") == "root(w<1;0;0>())"


def test_boundary_squares_to_zero():
    for t in cacti.enumerate_cells(2, 3):
        assert cacti.boundary(cacti.boundary(t))["terms"] == []


def test_boundary_of_delta_is_empty():
    assert cacti.boundary(DELTA) == {"degree": 0, "n": 1, "terms": []}


def test_compose_degree():
    c = cacti.compose(PRODUCT, 2, DELTA)
    assert c["n"] == 2 and c["degree"] == 1 and c["terms"]


def test_action_matches_hochschild_operations():
    f = cacti.random_cochain("dual", 2, seed=7)
    g = cacti.random_cochain("dual", 1, seed=8)
    assert cacti.act(DELTA, [f]) == cacti.hh_op("delta", [f])
    assert cacti.act(PRODUCT, [f, g]) == cacti.hh_op("cup", [f, g])
    assert cacti.act("root(w<1;0;0>())", [g]) == cacti.hh_op("normalize", [g])


def test_correlate():
    f = {"algebra": "dual", "arity": 1, "coeffs": [["0", "0"], ["0", "1"]]}
    assert cacti.correlate("root(w<1;0;0>())", [f], ["1", "0"], [["0", "1"]]) == "1"


def test_homology_and_hh():
    assert cacti.homology(2)["betti"] == [1, 3, 3, 1]
    assert cacti.homology(3, spineless=True)["betti"] == [1, 3, 2]
    assert cacti.hh("dual", 1)["dimension"] == 1


def test_algebra_and_errors():
    assert cacti.algebra("z2")["dim"] == 2
    with pytest.raises(ValueError):
        cacti.algebra("z5")
    with pytest.raises(cacti.ParseError):
        cacti.degree("root(w<1;0;")
    with pytest.raises(cacti.InvariantError):
        cacti.degree("root(w<1;0;0>()w<1;0;0>())")


def test_graph_round_trip():
    t = "root(w<1;0;1>(b(w<2;1;0>()w<3;0;0>())))"
    g = cacti.graph_from_tree(t)
    assert cacti.dual_tree(g) == t
    assert cacti.graph_info(g)["genus"] == 0


def test_suite():
    assert "d2" in cacti.suite_names()
    r = cacti.run_suite("d2", n=2, max_degree=3)
    assert r["pass"] and r["cases"] > 0
