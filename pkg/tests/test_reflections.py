import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatrefl import catalog as C
from quatrefl.exactfield import SQRT2
from quatrefl.linalg import MatH, VecH, is_unitary, norm2
from quatrefl.lines import line_of, orthocomplement
from quatrefl.quaternion import Q_I, Q_J, Q_K, Q_ONE, Quat
from quatrefl.reflections import (NotAReflection, detect_reflection, g_q1q2, imprimitivity_systems, is_reflection,
                                  make_reflection, monomial_subgroup, reflection_census, reflection_subgroup,
                                  reflection_type, scalar_group_label)

from conftest import rational_quats, vectors

UNIT_SCALARS = [-Q_ONE, Q_I, Q_J, -Q_K, (Q_ONE + Q_I) * SQRT2.inverse(), Quat(1, 1, 1, 1) / 2]
scalars = st.sampled_from(UNIT_SCALARS)
units = st.sampled_from([Q_ONE, Q_I, Q_J, Q_K, -Q_J, Quat(1, 1, 1, -1) / 2])


def test_diag_reflection():
    r = detect_reflection(MatH.diag(Q_I, 1))
    assert r.root == line_of(VecH(1, 0)) and r.scalar == Q_I and r.order == 4


def test_non_reflections():
    for g in (MatH.identity(), -MatH.identity(), C.matrix("F") * MatH.diag(Q_I, 1)):
        assert not is_reflection(g)
    with pytest.raises(NotAReflection):
        detect_reflection(MatH.identity())


def test_make_reflection_rejects_bad_scalars():
    with pytest.raises(ValueError):
        make_reflection(VecH(1, 0), Q_ONE)
    with pytest.raises(ValueError):
        make_reflection(VecH(1, 0), Quat(2))
    with pytest.raises(ValueError):
        make_reflection(VecH(0, 0), Q_I)


def test_K_census():
    # five orbits of two lines each (the five MUB pairs), all order two
    t = reflection_type(C.group("K"))
    assert len(reflection_census(C.group("K"))) == t.total == 10
    assert t.orbits == [(2, "C2")] * 5


def test_scalar_labels():
    assert scalar_group_label([Q_ONE, -Q_ONE]) == "C2"
    assert scalar_group_label([Q_ONE, Q_I, -Q_ONE, -Q_I]) == "C4"


def test_G_q1q2_order_and_reflection_subgroup():
    G = g_q1q2(Q_I, Q_J)
    assert G.order == 320
    assert reflection_subgroup(G).same_elements(G)
    with pytest.raises(ValueError):
        g_q1q2(Q_I, Q_I)


def test_monomial_subgroups():
    GM = {n: monomial_subgroup(C.group(n)) for n in ("P1", "P2", "P3")}
    assert [GM[n].order for n in ("P1", "P2", "P3")] == [64, 128, 768]
    assert C.group("K").is_subgroup_of(GM["P1"])
    assert all(g.is_monomial() for g in GM["P3"].elements)


def test_imprimitivity_counts():
    assert len(imprimitivity_systems(C.group("K"))) == 5
    assert imprimitivity_systems(C.group("P1")) == []


@given(vectors(), scalars)
def test_make_is_unitary_reflection(a, xi):
    g = make_reflection(a, xi)
    assert is_unitary(g)
    assert g * a == a.scale(xi)
    perp = orthocomplement(line_of(a)).vector()
    assert g * perp == perp


@given(vectors(), scalars)
def test_detect_inverts_make(a, xi):
    r = detect_reflection(make_reflection(a, xi))
    assert r.root == line_of(a)
    assert r.order == xi.order()
    assert r.scalar.x1 == xi.x1               # real part is a conjugation invariant
    assert r.matrix * r.root.vector() == r.root.vector().scale(r.scalar)


@given(vectors(), scalars, units)
def test_scaling_invariance(a, xi, lam):
    # r_{a lam, lam^-1 xi lam} = r_{a, xi}
    assert make_reflection(a.scale(lam), lam.inv() * xi * lam) == make_reflection(a, xi)


@given(vectors(), rational_quats().filter(lambda q: not q.is_zero()), scalars)
def test_root_normalisation_is_irrelevant(a, lam, xi):
    b = a.scale(lam)
    assert norm2(b) == norm2(a) * lam.nrd()
    assert make_reflection(b, lam.inv() * xi * lam) == make_reflection(a, xi)
