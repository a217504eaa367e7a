from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from conftest import field_elems, nonzero_elems, sym_equal, to_sympy
from hidsym.numfield import (
    I, IR2, ONE, R2, ZERO, FieldElem, NotASquare, add, conj, embed, format_elem, inv, mul,
    parse_elem, sqrt_in_field,
)


def E(text):
    return parse_elem(text)


def test_add_examples():
    assert add(E("1+i"), E("1-i")) == 2
    x = E("-1+i*r2")
    assert add(ZERO, x) == x
    assert add(x, E("-2+4*i*r2")) == E("-3+5*i*r2")


def test_mul_examples():
    assert mul(IR2, IR2) == -2
    assert mul(E("-1+i*r2"), E("3-i*r2")) == E("-1+4*i*r2")
    assert mul(E("2*i*r2"), E("-3*i*r2")) == 12


def test_inv_examples():
    assert inv(E("1-i")) == E("1/2+1/2*i")
    assert inv(R2) == E("1/2*r2")
    with pytest.raises(ZeroDivisionError):
        inv(ZERO)


def test_conj_examples():
    assert conj(E("2*i")) == E("-2*i")
    assert conj(E("-1+i*r2")) == E("-1-i*r2")
    assert conj(E("1+i*r2")) * E("1+i*r2") == 3


def test_sqrt_examples():
    assert sqrt_in_field(FieldElem(-1)) == I
    assert sqrt_in_field(FieldElem(2)) == R2
    assert sqrt_in_field(FieldElem(3)) is NotASquare
    assert not NotASquare
    assert sqrt_in_field(E("3+2*r2")) == E("1+r2")
    assert sqrt_in_field(ZERO) == ZERO


def test_sqrt_three_oracle():
    # x^2 - 3 stays irreducible over Q(i, sqrt2); x^2 - (3 + 2 sqrt2) splits
    x = sympy.Symbol("x")
    ext = [sympy.sqrt(2), sympy.I]
    assert sympy.factor_list(x**2 - 3, extension=ext)[1] == [(x**2 - 3, 1)]
    assert len(sympy.factor_list(x**2 - 3 - 2 * sympy.sqrt(2), extension=ext)[1]) == 2


def test_embed():
    assert abs(embed(IR2) - 1.4142135623730951j) < 1e-15
    assert abs(embed(FieldElem(Fraction(1, 3))) - 1 / 3) < 1e-15
    x = E("-3+5*i*r2")
    assert abs(embed(x) - complex(-3, 5 * 2 ** 0.5)) < 1e-13
    tiny = E("99-70*r2")
    assert abs(embed(tiny) - float(sympy.N(99 - 70 * sympy.sqrt(2), 30))) < 2 ** -48 * abs(embed(tiny))


def test_text_roundtrip():
    for text in ("0", "1", "-1 + 4*i*r2", "1/2*r2", "3 - 2*r2 + 1/3*i - 5/7*i*r2", "i", "-i*r2"):
        x = parse_elem(text)
        assert parse_elem(format_elem(x)) == x
    assert format_elem(E("-1+4*i*r2")) == "-1 + 4*i*r2"
    assert parse_elem("sqrt2*i") == IR2
    assert parse_elem("√2") == R2
    with pytest.raises(ValueError):
        parse_elem("1 + x")


def test_classifiers():
    assert E("3-2*i").is_gaussian_integer()
    assert not E("1/2").is_gaussian_integer()
    assert not IR2.is_gaussian_integer()
    assert FieldElem(5).is_rational_integer()
    assert not I.is_rational_integer()
    assert E("-r2+i").is_positive_normal() is False
    assert E("r2-i").is_positive_normal()


def test_real_sign():
    assert E("99-70*r2").sign() == 1
    assert E("70*r2-99").sign() == -1
    assert E("3-2*r2").sign() == 1
    assert ZERO.sign() == 0
    with pytest.raises(ValueError):
        I.sign()


@settings(max_examples=100, deadline=None)
@given(field_elems, field_elems, field_elems)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(conj(x)) == x


@settings(max_examples=60, deadline=None)
@given(field_elems, field_elems)
def test_mul_matches_sympy(x, y):
    assert sym_equal(to_sympy(x * y), to_sympy(x) * to_sympy(y))


@settings(max_examples=100, deadline=None)
@given(nonzero_elems)
def test_inverse(x):
    assert (x * inv(x)).is_one()


@settings(max_examples=100, deadline=None)
@given(field_elems)
def test_sqrt_of_square(y):
    root = sqrt_in_field(y * y)
    assert root in (y, -y)
    assert root.is_zero() or root.is_positive_normal()
