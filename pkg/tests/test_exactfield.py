import math
from fractions import Fraction

import pytest
from hypothesis import given

from quatrefl.exactfield import (ONE, SQRT2, SQRT3, SQRT5, ComplexElem, FieldElem, field_sign, format_field,
                                 parse_field, sqrt_in_field)

from conftest import field_elems, nonzero


def test_inverse_of_ten_plus_two_root_five():
    # (10 + 2 r5)(5 - r5) = 40
    assert (10 + 2 * SQRT5).inverse() == (5 - SQRT5) / 40


def test_radical_products():
    assert SQRT2 * SQRT3 == FieldElem.sqrt_of(6)
    assert SQRT2 * SQRT2 == 2
    assert (SQRT2 * SQRT3 * SQRT5) ** 2 == 30
    assert FieldElem.sqrt_of(10) * FieldElem.sqrt_of(15) == 5 * FieldElem.sqrt_of(6)


@pytest.mark.parametrize("expr, sign", [
    (7 - 2 * SQRT5 - SQRT2, 1),
    (5 - 2 * SQRT2 * SQRT3, 1),       # (r3 - r2)^2, about 0.101
    (49 - 20 * SQRT2 * SQRT3, 1),     # (5 - 2 r6)^2, about 0.0102
    (20 * SQRT2 * SQRT3 - 49, -1),
    (SQRT2 + SQRT3 - SQRT5 - FieldElem.rational(Fraction(1, 2)), 1),
    (FieldElem(), 0),
])
def test_sign_examples(expr, sign):
    assert field_sign(expr) == sign


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        FieldElem().inverse()


def test_unknown_radical_rejected():
    with pytest.raises(ValueError):
        FieldElem.sqrt_of(7)


def test_canonical_form_is_unique():
    a = FieldElem([2, 4], den=6)
    b = FieldElem([Fraction(1, 3), Fraction(2, 3)])
    assert a == b and hash(a) == hash(b)
    assert a.coeffs[:2] == (Fraction(1, 3), Fraction(2, 3))


def test_sqrt_in_field():
    assert sqrt_in_field(FieldElem.rational(Fraction(9, 2))) == 3 * SQRT2 / 2
    assert sqrt_in_field(FieldElem.rational(12)) == 2 * SQRT3
    assert sqrt_in_field(FieldElem.rational(7)) is None
    assert sqrt_in_field(SQRT2) is None
    assert sqrt_in_field(FieldElem.rational(-4)) is None


def test_parse_accepts_bare_radicals():
    assert parse_field("1 - r5") == 1 - SQRT5
    assert parse_field("-1/2*r30+3") == 3 - SQRT2 * SQRT3 * SQRT5 / 2
    with pytest.raises(ValueError):
        parse_field("r7")
    with pytest.raises(ValueError):
        parse_field("")


def test_complex_inverse():
    z = ComplexElem(1, SQRT2)
    assert z * z.inverse() == 1
    assert ComplexElem(0, 1) * ComplexElem(0, 1) == -1


@given(nonzero(field_elems()))
def test_inverse_property(a):
    assert a * a.inverse() == ONE


@given(field_elems(), field_elems(), field_elems())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == FieldElem()


@given(field_elems(), field_elems())
def test_sign_is_multiplicative(a, b):
    assert field_sign(a * b) == field_sign(a) * field_sign(b)


@given(field_elems())
def test_sign_agrees_with_float_embedding(a):
    x = float(a)
    if abs(x) > 1e-9:
        assert field_sign(a) == (1 if x > 0 else -1)
    assert field_sign(a) == 0 or not a.is_zero()


@given(field_elems())
def test_float_embedding_is_accurate(a):
    exact = sum(float(q) * math.sqrt(m) for q, m in zip(a.coeffs, (1, 2, 3, 5, 6, 10, 15, 30)))
    assert math.isclose(float(a), exact, rel_tol=1e-12, abs_tol=1e-12)


@given(field_elems())
def test_text_round_trip(a):
    assert parse_field(format_field(a)) == a
