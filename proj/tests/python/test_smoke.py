"""End-to-end smoke of the python module against hand-checked values."""

import math

import numpy as np
import pytest

import lieco


def test_catalog_and_validation():
    names = lieco.catalog_names()
    for expected in ["abelian2", "heisenberg1", "galilei11", "poincare11", "su2", "sl2r"]:
        assert expected in names

    su2 = lieco.algebra("su2")
    assert su2.dim == 3
    assert su2.validate()["ok"]
    assert su2.c(0, 1, 2) == "1"
    assert su2.c(1, 0, 2) == "-1"

    # a table that breaks the Jacobi identity is reported, not accepted
    bad = lieco.algebra_from_text(
        "algebra bad\ndim 3\nnames X1 X2 X3\n"
        "bracket X1 X2 = 1 X3\nbracket X1 X3 = 1 X1\nbracket X2 X3 = 1 X3\n"
    )
    report = bad.validate()
    assert not report["ok"]
    assert report["issues"][0]["kind"] == "JacobiViolation"


def test_serialize_round_trip():
    g = lieco.algebra("galilei11")
    again = lieco.algebra_from_text(g.serialize())
    assert again.same_table(g)


def test_cohomology_dimensions():
    dims = {name: lieco.h2(lieco.algebra(name))["h2"] for name in lieco.catalog_names()}
    assert dims == {
        "abelian2": 1,
        "heisenberg1": 2,
        "galilei11": 2,
        "poincare11": 1,
        "su2": 0,
        "sl2r": 0,
    }


def test_decompose_and_extension():
    g = lieco.algebra("galilei11")
    mu = ["0", "1", "0"]
    split = lieco.decompose(g, lieco.coboundary_of(g, mu))
    assert split["trivial"]
    assert split["representative"] == []

    mass = [(1, 2, "1")]
    assert not lieco.decompose(g, mass)["trivial"]
    extended, central = lieco.central_extension(g, mass)
    assert extended.dim == 4 and central == 3
    assert extended.validate()["ok"]

    with pytest.raises(lieco.LiecoError, match="NotACoboundary"):
        lieco.trivialize_extension(g, mass)


def test_contraction_generates_a_class():
    poi = lieco.algebra("poincare11")
    rest_energy = [(1, 2, "1")]
    assert lieco.decompose(poi, rest_energy)["trivial"]

    res = lieco.contract(poi, ["H"], rest_energy, scale=2)
    assert res["algebra"].same_table(lieco.algebra("galilei11"))
    assert not lieco.decompose(res["algebra"], res["gamma"])["trivial"]

    with pytest.raises(lieco.LiecoError, match="DivergenceError"):
        lieco.contract(poi, ["H"], rest_energy, scale=3)


def test_presymplectic_rank_and_kernel():
    su2 = lieco.algebra("su2")
    form = lieco.omega(su2, ["0", "0", "1"])
    assert form["rank"] == 2
    assert form["kernel"] == [["0", "0", "1"]]
    assert lieco.characteristic_subalgebra(su2, ["0", "0", "1"]) == [["0", "0", "1"]]


def test_orbit_classification():
    su2 = lieco.realization("su2")
    eq = lieco.same_orbit(su2, ["0", "0", "1"], ["1", "0", "0"])
    assert eq["status"] == "equivalent"
    assert eq["residual"] < 1e-8
    gap = lieco.witness_check(su2, ["0", "0", "1"], ["1", "0", "0"], eq["witness"])
    assert gap < 1e-7

    far = lieco.same_orbit(su2, ["0", "0", "1"], ["0", "0", "2"])
    assert far["status"] == "distinct"
    assert far["separating_invariant"] == "radius-squared"


def test_deformed_classes_collapse():
    ab = lieco.realization("abelian2")
    joined = lieco.pseudo_class(ab, ["1", "0"], ["0", "1"], cocycle="weyl")
    split = lieco.pseudo_class(ab, ["1", "0"], ["0", "1"])
    assert joined["status"] == "equivalent"
    assert split["status"] == "distinct"


def test_charges_total_in_parameters():
    su2 = lieco.realization("su2")
    # the z -> x rotation sits where the chart cannot express the element
    pole = np.array([0.0, math.pi / 2, 0.0])
    with pytest.raises(lieco.LiecoError, match="ChartOverflow"):
        su2.element_of_params(pole)
    charges = su2.noether_of_params("lambda-z", pole)
    assert np.allclose(charges, [1.0, 0.0, -1.0], atol=1e-9)


def test_integrality():
    su2 = lieco.realization("su2")
    assert su2.integrality(["0", "0", "1/2"])["integral"]
    assert not su2.integrality(["0", "0", "3/10"])["integral"]


def test_group_verify():
    rep = lieco.realization("galilei11").verify(samples=64, seed=42)
    assert rep["ok"]
    assert all(line["ok"] for line in rep["lines"])
