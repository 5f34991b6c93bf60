from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fig8char.cli import read_repr
from fig8char.grp import (
    Representation,
    Word,
    apply_automorphism,
    automorphism_images,
    check_relations,
    convert,
    dehn_phi,
    failing_relations,
    longitude,
    meridian,
    word,
)
from fig8char.mat3 import Mat3

FIXTURE = Path(__file__).parent / "fixtures" / "example_rep.json"


@pytest.fixture(scope="module")
def rho():
    rep, _ = read_repr(FIXTURE)
    return rep


st_words = st.lists(st.tuples(st.sampled_from("ST"), st.sampled_from((1, -1))), max_size=8).map(
    lambda ls: Word("ST", ls))


def test_free_reduction_and_text():
    assert str(word("S.T.T'.S'")) == "1"
    assert str(word("S.T'")) == "S.T'"
    assert word("t.a.b").alphabet == "TAB"
    with pytest.raises(ValueError):
        word("S.a")
    with pytest.raises(ValueError):
        word("S''")


@given(st_words, st_words)
def test_inverse_and_product(u, v):
    assert len(u * u.inverse()) == 0
    assert (u * v).inverse() == v.inverse() * u.inverse()


@given(st_words)
def test_alphabet_conversion_is_consistent(u):
    # converting both ways is the identity in the group; compare on the example
    rep, _ = read_repr(FIXTURE)
    tab = Representation("TAB", {g: rep(word(g)) for g in "tab"})
    assert tab(convert(u, "TAB")) == rep(u)
    assert rep(convert(convert(u, "TAB"), "ST")) == rep(u)


def test_example_relations(rho):
    assert check_relations(rho)
    tab = Representation("TAB", {g: rho(word(g)) for g in "tab"})
    assert failing_relations(tab) == []


def test_broken_relation_is_named(rho):
    bad = Representation("ST", {"S": rho.gens["S"], "T": Mat3([[1, 1, 0], [0, 1, 0], [0, 0, 1]])})
    names = failing_relations(bad)
    assert names and "S" in names[0]


def test_longitude_commutes_with_meridian(rho):
    S, L = rho(meridian()), rho(longitude())
    assert S @ L == L @ S
    # the longitude is unipotent for this boundary-parabolic example
    assert L.charpoly() == [-1, 3, -3, 1]


def test_automorphisms_preserve_the_relation(rho):
    for name in ("f", "h"):
        assert check_relations(rho.pullback(automorphism_images(name), "ST"))


def test_automorphism_orders_on_words():
    for g in "ST":
        w = word(g)
        assert apply_automorphism("f", apply_automorphism("f", w)) == w
    assert apply_automorphism("f", word("t")).alphabet == "TAB"
    with pytest.raises(ValueError):
        automorphism_images("q")


def test_dehn_phi_images():
    assert str(dehn_phi(word("S"))) == "k.l.k"
    assert str(dehn_phi(word("T"))) == "k.l.k.l.k"
    assert dehn_phi(word("t")).alphabet == "KL"
