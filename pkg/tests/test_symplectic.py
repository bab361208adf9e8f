import pytest
from hypothesis import given

from quatrefl import catalog as C
from quatrefl.exactfield import ComplexElem
from quatrefl.groups import MatGroup
from quatrefl.linalg import MatC, MatH
from quatrefl.quaternion import Q_I, Q_J, Q_K, Quat
from quatrefl.symplectic import (blichfeldt_pipeline, c_to_h, conjugate, fs_indicator, h_to_c, has_real_trace,
                                 is_symplectic, real_trace_scaling)

from conftest import matrices


def test_block_layout():
    # A + B j  <->  [[A, -B], [conj B, conj A]]
    m = h_to_c(MatH([[Quat(1, 2, 3, 4), 0], [0, 1]]))
    assert m[0, 0] == ComplexElem(1, 2)
    assert m[0, 2] == -ComplexElem(3, 4)
    assert m[2, 0] == ComplexElem(3, -4)
    assert m[2, 2] == ComplexElem(1, -2)


def test_non_symplectic_rejected():
    p = MatC.permutation([1, 0, 2, 3])
    assert not is_symplectic(p)
    with pytest.raises(ValueError):
        c_to_h(p)


def test_fs_indicators():
    A = [C.blichfeldt(n) for n in ("A1", "A2", "A3", "A4")]
    assert fs_indicator(MatGroup(A)) == 1
    iA = [C.blichfeldt(n) for n in ("A1", "iA2", "iA3", "A4")]
    assert fs_indicator(MatGroup(iA)) == -1


def test_fs_indicator_needs_complex_group():
    with pytest.raises(TypeError):
        fs_indicator(C.group("K"))


def test_P_T_P_is_t():
    P = C.blichfeldt("P_perm")
    assert c_to_h(conjugate(C.blichfeldt("T"), P)) == C.matrix("t")
    assert C.matrix("t").order() == 10


def test_real_trace_scaling():
    m = h_to_c(MatH.diag(Q_I, 1))
    assert has_real_trace(m)
    assert real_trace_scaling(m) == 1


def test_pipeline_rejects_unknown_names():
    with pytest.raises((KeyError, ValueError)):
        blichfeldt_pipeline("99")


@given(matrices(), matrices())
def test_bridge_is_multiplicative(a, b):
    assert h_to_c(a * b) == h_to_c(a) * h_to_c(b)


@given(matrices())
def test_bridge_round_trip(a):
    c = h_to_c(a)
    assert is_symplectic(c)
    assert c_to_h(c) == a
    assert has_real_trace(c)


@given(matrices())
def test_bridge_respects_adjoints(a):
    assert h_to_c(a.adjoint()) == h_to_c(a).adjoint()


def test_units_map_to_unitaries():
    for q in (Q_I, Q_J, Q_K):
        assert h_to_c(MatH.diag(q, 1)).is_unitary()
