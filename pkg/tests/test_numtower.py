from fractions import Fraction

import mpmath
import pytest
from conftest import cyclos, nonzero_cyclos, rationals
from hypothesis import given
from hypothesis import strategies as st

from fig8char.numtower import (
    OMEGA,
    Cyclo12,
    G,
    I,
    ParseError,
    QuadExt,
    cube_roots,
    format_elem,
    parse_elem,
    roots_in_field,
    simplify,
    sqrt_adjoin,
    sqrt_elem,
    to_complex,
)


def test_generator_relations():
    assert G ** 4 == G ** 2 - 1
    assert G ** 12 == 1 and G ** 6 == -1
    assert I * I == -1
    assert OMEGA ** 3 == 1 and OMEGA != 1
    assert 1 + OMEGA + OMEGA ** 2 == 0
    assert G == -OMEGA * I


def test_embedding_matches_independent_value():
    # 3 + 2g − g³ = 3 + √3 under g ↦ e^{iπ/6}
    z = to_complex(Cyclo12(3, 2, 0, -1))
    assert abs(z - (3 + mpmath.sqrt(3))) < 1e-12


@given(cyclos, cyclos, cyclos)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(nonzero_cyclos)
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(cyclos, st.sampled_from([1, 5, 7, 11]))
def test_galois_is_multiplicative(a, k):
    b = a + G
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)


@given(nonzero_cyclos)
def test_norm_is_rational_and_multiplicative(a):
    n = a.norm()
    assert Fraction(n) == n
    assert (a * a).norm() == n * n


@given(cyclos)
def test_format_parse_roundtrip(a):
    assert parse_elem(format_elem(a)) == a


def test_rational_equality_and_hash():
    assert Cyclo12(5) == Fraction(5)
    assert hash(Cyclo12(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert simplify(Cyclo12(3)) == 3


def test_known_square_roots():
    assert sqrt_elem(-3) == 1 + 2 * OMEGA
    assert sqrt_elem(-1) in (I, -I)
    assert sqrt_elem(I) is None
    assert sqrt_elem(2) is None
    assert sqrt_elem(3) ** 2 == 3


@given(nonzero_cyclos)
def test_sqrt_of_square(a):
    r = sqrt_elem(a * a)
    assert r is not None and r * r == a * a


def test_adjoined_root():
    ctx = sqrt_adjoin(5)
    assert not ctx.degenerate
    assert ctx.s * ctx.s == 5
    x = QuadExt(1, 2, 5)
    assert x * x.inverse() == 1
    assert sqrt_adjoin(-3).degenerate


@given(rationals, rationals)
def test_quadext_conjugation(p, q):
    x = QuadExt(p, q, -7)
    assert x * x.conj_s() == p * p + 7 * q * q


def test_quadext_rejects_square_radicand():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)


def test_cube_roots():
    assert sorted(map(format_elem, cube_roots(8))) == sorted(["2", "2*w", "-2-2*w"])
    assert cube_roots(2) == []
    assert cube_roots(0) == [0]


def test_roots_in_field_quadratic_extension():
    # x² − x − 1 has roots (1 ± √5)/2
    roots = roots_in_field([-1, -1, 1], 5)
    assert len(roots) == 2
    for r in roots:
        assert r * r - r - 1 == 0


def test_parse_grammar():
    assert parse_elem("1/2*i") == I / 2
    assert parse_elem("-w^2") == -OMEGA ** 2
    assert parse_elem("1+s", 5) == QuadExt(1, 1, 5)
    with pytest.raises(ParseError):
        parse_elem("s")
    with pytest.raises(ParseError) as info:
        parse_elem("1+*2")
    assert info.value.pos is not None


@given(nonzero_cyclos)
def test_cube_roots_are_complete(r):
    roots = cube_roots(r ** 3)
    assert len(roots) == 3 and r in roots
    assert all(x ** 3 == r ** 3 for x in roots)


@given(nonzero_cyclos, cyclos)
def test_cube_roots_in_quadratic_extension(p, q):
    s = sqrt_adjoin(5).s
    r = p + q * s
    roots = cube_roots(r ** 3)
    assert len(roots) == 3 and r in roots


def test_non_cubes_have_no_roots():
    assert cube_roots(2) == [] and cube_roots(3 + I) == []
