import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from quatrefl import catalog as C
from quatrefl.exactfield import SQRT2, FieldElem
from quatrefl.floatcheck import (DomainError, NotRepresentable, SweepConfig, embedding_error, exact_family_check,
                                 exact_family_vector, family_residual, group_f, family_vector, inner_f, qmul_f, quat_f,
                                 residual_f, sweep, vec_f)
from quatrefl.linalg import inner

from conftest import matrices, quats, vectors


def test_residual_detects_a_non_fixed_line():
    e1 = np.array([[1.0, 0, 0, 0], [0, 0, 0, 0]])
    swap = np.array([[[[0.0] * 4, [1.0, 0, 0, 0]], [[1.0, 0, 0, 0], [0.0] * 4]]])
    assert residual_f(swap, e1) == 1.0
    assert residual_f(group_f(C.group("G8_family")), e1) == 1.0


def test_family_domain():
    with pytest.raises(DomainError):
        family_vector(0.75)
    with pytest.raises(ValueError):
        family_vector(0.1, sign=0)
    with pytest.raises(DomainError):
        exact_family_vector(FieldElem.rational(1))
    with pytest.raises(NotRepresentable):
        exact_family_vector(FieldElem.rational(Fraction(1, 3)))


def test_family_endpoints_and_sweep():
    G = C.group("G8_family")
    assert family_residual(G, 1 / math.sqrt(2)) < 1e-12
    res = sweep(G, SweepConfig(grid=51))
    assert res.passed and res.max_residual < 1e-10


def test_exact_family_points():
    for t in (FieldElem(), FieldElem.rational(Fraction(1, 2)), SQRT2.inverse()):
        assert exact_family_check(t)


def test_family_breaks_outside_its_group():
    assert family_residual(C.group("P1"), 0.3) > 1e-3


@given(quats(), quats())
def test_float_product_matches_exact(p, q):
    assert np.allclose(qmul_f(quat_f(p), quat_f(q)), quat_f(p * q), atol=1e-9)


@given(vectors(), vectors())
def test_float_inner_matches_exact(v, w):
    assert np.allclose(inner_f(vec_f(v), vec_f(w)), quat_f(inner(v, w)), atol=1e-9)


@given(matrices(), matrices())
def test_float_matrix_product_matches_exact(a, b):
    assert embedding_error(a, b) < 1e-9
