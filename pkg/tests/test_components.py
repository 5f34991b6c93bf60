from fractions import Fraction as F

import pytest
from conftest import rationals
from hypothesis import assume, given

from fig8char.components import (
    INTERSECTION_FIXTURES,
    boundary_curve,
    boundary_curve_alpha,
    catalog,
    classify,
    classify_orbit,
    reducible_curve,
    sextic_discriminant_check,
    w_catalog,
    w_component_of,
    xpr_parameters,
    xpr_xtr_curve,
)
from fig8char.constructors import v0_family, v1_family, v2_family, xpr_point, xtr_point
from fig8char.coords import CharCoords, orbit
from fig8char.numtower import sqrt_adjoin
from fig8char.poly import expand_is_zero, var


def test_catalog_sizes():
    assert len(catalog("V0")) == 20  # 18 radical generators plus alpha = alphab, beta = betab
    assert len(catalog("XTR")) == len(catalog("V1")) == len(catalog("V2")) == 6
    with pytest.raises(KeyError):
        catalog("V7")


def test_intersection_fixtures():
    for points, expected in INTERSECTION_FIXTURES:
        assert len(points) == 3
        for c in points:
            got = classify(c)
            assert got.members == expected and not got.undecided


def test_intersection_orbit_classification():
    for points, expected in INTERSECTION_FIXTURES:
        assert classify_orbit(orbit(points[0])).members == expected


@given(rationals, rationals)
def test_xtr_points_classify(y, yb):
    c = xtr_point(y, yb)
    assert "XTR" in classify(c)
    assert "V1" not in classify(c) and "V2" not in classify(c)


@given(rationals, rationals)
def test_xpr_parameters_recovered(x1, v):
    assume(x1 != 1 and x1 * x1 + x1 - 1 and v)
    w = v * v * (x1 - 1) / (x1 * x1 + x1 - 1)
    c = xpr_point(v, w, x1)
    found = xpr_parameters(c)
    assert found and xpr_point(*found) == c
    assert "XPR" in classify(c)


def test_xpr_parameters_with_a_quadratic_irrationality():
    # (4,4,8,8,3,3,3,3) needs sqrt(5): v = 5/2 + s/2, w = 3/2 + s/2, x1 = 2
    c = CharCoords(4, 4, 8, 8, 3, 3, 3, 3)
    v, w, x1 = classify(c).xpr_params
    assert x1 == 2 and w * w - 3 * w + 1 == 0 and v == 4 - 1 / w


def test_xpr_xtr_curve():
    assert xpr_xtr_curve(CharCoords(4, 4, 8, 8, 3, 3, 3, 3))
    assert not xpr_xtr_curve(xtr_point(0, 0))


def test_family_orbits_classify():
    assert "V2" in classify_orbit(v2_family(2, 5).orbit)
    assert "V1" in classify_orbit(v1_family(2, 5).orbit)
    assert "V0" in classify_orbit(v0_family(2, 5).orbit)


def test_w_discriminant_catalog():
    W = w_catalog()
    assert sorted(W) == ["W0", "W1", "W2"]
    for parts in W.values():
        assert expand_is_zero(parts["P"] * parts["P"] - 4 * parts["Q"] - parts["disc"])
    assert w_component_of({"V1"}) == "W1"
    assert w_component_of({"V2"}) == "W2"
    assert w_component_of({"V0", "V1"}) == "W0"


def test_boundary_curve_at_three():
    s = sqrt_adjoin(5).s
    for w3 in (9 + 4 * s, 9 - 4 * s):
        # w6 - 18 w3 + 1 = 0 at alpha = 3
        assert w3 * w3 - 18 * w3 + 1 == 0
    assert sextic_discriminant_check(3) == 80
    with pytest.raises(ValueError):
        boundary_curve(1, 1)
    with pytest.raises(ValueError):
        boundary_curve_alpha(1, 2)


def test_boundary_forms_agree():
    for x1 in (F(3), F(-1, 2), F(5, 7)):
        for w in (F(1), F(2), F(-3)):
            assert boundary_curve(w, x1) == boundary_curve_alpha(w, x1 + 1)


def test_discriminant_factorization_symbolic():
    a = var("alpha")
    assert expand_is_zero(a ** 2 * (2 * a - 3) ** 2 - (a - 2) ** 2
                          - 4 * (a ** 2 - a - 1) * (a - 1) ** 2)


def test_reducible_curve():
    r = reducible_curve()
    assert r.eval({"alpha": 3, "beta": 3}) == 0
    assert r.eval({"alpha": 1, "beta": 1}) == 0
