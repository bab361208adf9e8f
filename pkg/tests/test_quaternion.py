import pytest
from hypothesis import given

from quatrefl.exactfield import ONE, SQRT2, FieldElem
from quatrefl.quaternion import (CapExceeded, Q_I, Q_J, Q_K, Q_ONE, Quat, circ, format_quat, is_reflection_system,
                                 parse_quat, reflection_system_closure, unit_closure)

from conftest import nonzero, quats

A = (Q_ONE + Q_I) * SQRT2.inverse()           # (1+i)/sqrt2
B = Quat(1, 1, 1, 1) / 2                       # (1+i+j+k)/2


def test_hamilton_relations():
    assert Q_I * Q_J == Q_K and Q_J * Q_K == Q_I and Q_K * Q_I == Q_J
    assert Q_I * Q_I == -Q_ONE and Q_J * Q_I == -Q_K


def test_circ_examples():
    # a o b = a b^-1 a
    assert circ(Q_ONE, Q_I) == -Q_I
    assert circ(Q_I, Q_ONE) == -Q_ONE
    assert circ(Q_I, Q_J) == -Q_J
    assert circ(A, Q_ONE) == A * A


def test_element_orders():
    assert Q_I.order() == 4
    assert (-Q_ONE).order() == 2
    assert A.order() == 8
    assert B.order() == 6
    assert Quat(FieldElem.rational(3) / 5, FieldElem.rational(4) / 5).order(limit=200) is None


def test_unit_closures():
    assert len(unit_closure([Q_I, Q_J])) == 8
    assert len(unit_closure([A, B])) == 48
    assert len(unit_closure([B, Q_I])) == 24


def test_reflection_system_closures():
    # a o b = -b for orthogonal units, so k never appears from {1, i, j}
    assert reflection_system_closure([Q_ONE, Q_I, Q_J]) == {Q_ONE, -Q_ONE, Q_I, -Q_I, Q_J, -Q_J}
    q8 = reflection_system_closure([Q_ONE, Q_I, Q_J, Q_K])
    assert q8 == frozenset(unit_closure([Q_I, Q_J]))
    assert is_reflection_system(q8)
    assert len(reflection_system_closure([Q_ONE, A, B, Q_J])) == 32


def test_closure_cap():
    with pytest.raises(CapExceeded):
        unit_closure([Quat(FieldElem.rational(3) / 5, FieldElem.rational(4) / 5)], cap=50)


def test_parse_round_trip_example():
    q = Quat(1, -SQRT2, 0, FieldElem.rational(1) / 2)
    assert parse_quat(format_quat(q)) == q


@given(quats(), quats())
def test_nrd_is_multiplicative(p, q):
    assert (p * q).nrd() == p.nrd() * q.nrd()


@given(quats(), quats())
def test_conjugation_reverses_products(p, q):
    assert (p * q).conj() == q.conj() * p.conj()


@given(quats(), quats(), quats())
def test_associativity(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(nonzero(quats()))
def test_inverse(q):
    assert q * q.inv() == Q_ONE == q.inv() * q
    assert q.nrd() * q.nrd().inverse() == ONE


@given(nonzero(quats()), nonzero(quats()))
def test_circ_is_left_distributive_on_the_identity(a, b):
    # a o a = a and the product is invariant under sign of b
    assert circ(a, a) == a
    assert circ(a, -b) == -circ(a, b)


@given(quats())
def test_text_round_trip(q):
    assert parse_quat(format_quat(q)) == q
